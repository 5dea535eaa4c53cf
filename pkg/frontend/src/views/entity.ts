import { ApiClient } from '../api';
import { el, iriAnchor } from '../dom';
import { termText } from '../types';

/** Instance overview: every stored assertion, plus links and next actions. */
export async function renderEntity(api: ApiClient, iri: string): Promise<HTMLElement> {
  const entity = await api.entity(iri);
  const root = el('section', { class: 'screen screen-entity', 'data-iri': entity.iri });

  root.append(
    el('h2', { text: entity.compact ?? entity.iri }),
    iriAnchor(entity, 'entity-iri'),
    el(
      'p',
      { class: 'entity-types' },
      'Types: ',
      ...(entity.types.length
        ? entity.types.map((t) => iriAnchor(t, 'type-chip'))
        : ['(none)']),
    ),
    el(
      'nav',
      { class: 'entity-actions' },
      el('a', {
        class: 'action action-link',
        href: `#/link/${encodeURIComponent(entity.iri)}`,
        text: 'Find link candidates',
      }),
      el('a', {
        class: 'action action-enhance',
        href: `#/enhance/${encodeURIComponent(entity.iri)}`,
        text: 'Enhance from linked entity',
      }),
    ),
  );

  const table = el('table', { class: 'assertions' });
  for (const triple of entity.assertions) {
    table.append(
      el(
        'tr',
        { class: `assertion origin-${triple.origin}` },
        el('td', {}, iriAnchor(triple.predicate)),
        el('td', { text: termText(triple.object) }),
        el('td', { class: 'origin', text: triple.origin }),
      ),
    );
  }
  root.append(el('h3', { text: 'Assertions' }), table);

  const links = el('ul', { class: 'links' });
  for (const link of entity.links) {
    links.append(
      el('li', { class: 'link-row' }, `${link.link_type} `, iriAnchor(link.target)),
    );
  }
  root.append(
    el('h3', { text: 'Established links' }),
    entity.links.length ? links : el('p', { class: 'empty-state', text: 'No links yet.' }),
  );
  return root;
}
