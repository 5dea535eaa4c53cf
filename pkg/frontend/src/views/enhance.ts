import { ApiClient, ApiError } from '../api';
import { beginDrag, currentDrag, endDrag } from '../dnd';
import { el, iriAnchor } from '../dom';
import { EnhancementKind, TermJson, termText, termToPayload } from '../types';

const RDF_TYPE = 'http://www.w3.org/1999/02/22-rdf-syntax-ns#type';

export interface EnhanceActions {
  refresh(): void;
}

/** Two-pane editor: local assertions left, enhancement candidates right.
 *
 * Dragging a candidate value highlights every drop area. Dropping on an
 * existing property row adds the value to that property; dropping on the
 * "new property" zone copies the fact under its original predicate.
 */
export async function renderEnhance(
  api: ApiClient,
  iri: string,
  actions: EnhanceActions,
): Promise<HTMLElement> {
  const root = el('section', { class: 'screen screen-enhance', 'data-iri': iri });
  const entity = await api.entity(iri);
  root.append(
    el('h2', { text: `Enhance ${entity.compact ?? entity.iri}` }),
    iriAnchor(entity, 'entity-iri'),
  );

  const errorSlot = el('div', { class: 'inline-error-slot' });
  root.append(errorSlot);

  function showError(message: string): void {
    errorSlot.replaceChildren(el('p', { class: 'inline-error', text: message }));
  }

  let groups;
  try {
    groups = (await api.enhanceCandidates(iri)).groups;
  } catch (error) {
    if (error instanceof ApiError && error.code === 'NoLinkEstablished') {
      root.append(
        el(
          'p',
          { class: 'guidance' },
          'Establish a link first so there is a source entity to copy from. ',
          el('a', { href: `#/link/${encodeURIComponent(iri)}`, text: 'Find link candidates' }),
        ),
      );
      return root;
    }
    throw error;
  }
  const sourceEntity = entity.links.find((l) => l.link_type === 'owl:sameAs')?.target.iri
    ?? entity.links[0]?.target.iri;

  async function applyDrop(kind: EnhancementKind, predicate: string, value: TermJson): Promise<void> {
    try {
      await api.enhance(kind, iri, predicate, termToPayload(value), sourceEntity);
      actions.refresh();
    } catch (error) {
      if (error instanceof ApiError) {
        showError(`${error.code}: ${error.message}`);
      } else {
        showError(String(error));
      }
    }
  }

  // left pane: current local assertions, one drop zone per distinct property
  const localPane = el('div', { class: 'pane pane-local' }, el('h3', { text: 'Local repository' }));
  const byPredicate = new Map<string, typeof entity.assertions>();
  for (const triple of entity.assertions) {
    const rows = byPredicate.get(triple.predicate.iri) ?? [];
    rows.push(triple);
    byPredicate.set(triple.predicate.iri, rows);
  }
  for (const [predicate, rows] of byPredicate) {
    const zone = el('div', {
      class: 'property-row drop-zone',
      'data-drop': 'property',
      'data-predicate': predicate,
    });
    zone.append(el('h4', {}, iriAnchor(rows[0].predicate)));
    for (const triple of rows) {
      const row = el(
        'div',
        { class: `local-value origin-${triple.origin}` },
        el('span', { class: 'value-text', text: termText(triple.object) }),
      );
      const remove = el('button', { class: 'delete-assertion', title: 'Delete this assertion', text: 'x' });
      remove.addEventListener('click', async () => {
        try {
          await api.deleteTriple(iri, predicate, termToPayload(triple.object));
          actions.refresh();
        } catch (error) {
          showError(error instanceof ApiError ? `${error.code}: ${error.message}` : String(error));
        }
      });
      row.append(remove);
      zone.append(row);
    }
    attachDropHandlers(zone, root, (payload) => {
      const kind: EnhancementKind = predicate === RDF_TYPE ? 'add_type' : 'add_value';
      void applyDrop(kind, predicate, payload.value);
    });
    localPane.append(zone);
  }
  const newPropertyZone = el('div', {
    class: 'new-property drop-zone',
    'data-drop': 'new-property',
    text: 'Drop here to create a new property',
  });
  attachDropHandlers(newPropertyZone, root, (payload) => {
    const kind: EnhancementKind = payload.predicate === RDF_TYPE ? 'add_type' : 'add_to_new_property';
    void applyDrop(kind, payload.predicate, payload.value);
  });
  localPane.append(newPropertyZone);

  // right pane: most frequent assertions of the linked source entity
  const sourcePane = el('div', { class: 'pane pane-source' }, el('h3', { text: 'Linked source entity' }));
  for (const group of groups) {
    const block = el('div', { class: 'candidate-group', 'data-predicate': group.predicate.iri });
    block.append(el('h4', {}, iriAnchor(group.predicate)));
    for (const value of group.values) {
      const chip = el('span', {
        class: 'draggable-value',
        draggable: 'true',
        'data-predicate': group.predicate.iri,
        text: termText(value),
      });
      chip.addEventListener('dragstart', () =>
        beginDrag({ predicate: group.predicate.iri, value }, root),
      );
      chip.addEventListener('dragend', () => endDrag(root));
      block.append(chip);
    }
    sourcePane.append(block);
  }

  root.append(el('div', { class: 'panes' }, localPane, sourcePane));
  return root;
}

function attachDropHandlers(
  zone: HTMLElement,
  root: HTMLElement,
  onDrop: (payload: { predicate: string; value: TermJson }) => void,
): void {
  zone.addEventListener('dragover', (event) => event.preventDefault());
  zone.addEventListener('drop', (event) => {
    event.preventDefault();
    const payload = currentDrag();
    endDrag(root);
    // drops are no-ops unless a drag is in progress (zones are only live while highlighted)
    if (payload) {
      onDrop(payload);
    }
  });
}
