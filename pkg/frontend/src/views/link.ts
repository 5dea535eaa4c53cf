import { ApiClient, ApiError } from '../api';
import { el, iriAnchor } from '../dom';
import { ViewState } from '../state';
import { ALGORITHMS, termText } from '../types';

export interface LinkActions {
  navigate(state: ViewState): void;
  refresh(): void;
}

/** Candidate review: ranked list with context cards and an accept action. */
export async function renderLink(
  api: ApiClient,
  iri: string,
  algorithm: string | undefined,
  actions: LinkActions,
): Promise<HTMLElement> {
  const root = el('section', { class: 'screen screen-link', 'data-iri': iri });
  const entity = await api.entity(iri);
  root.append(
    el('h2', { text: `Link candidates for ${entity.compact ?? entity.iri}` }),
    iriAnchor(entity, 'entity-iri'),
  );

  const selector = el('select', { class: 'algorithm-select' }) as HTMLSelectElement;
  const active = algorithm ?? 'endpoint-al';
  for (const name of ALGORITHMS) {
    const option = el('option', { value: name, text: name }) as HTMLOptionElement;
    option.selected = name === active;
    selector.append(option);
  }
  selector.addEventListener('change', () =>
    actions.navigate({ screen: 'link', selectedEntity: iri, algorithm: selector.value }),
  );
  root.append(el('label', { class: 'algorithm-label' }, 'Algorithm: ', selector));

  const linked = new Set(entity.links.map((l) => l.target.iri));

  let response;
  try {
    response = await api.candidates(iri, active);
  } catch (error) {
    if (error instanceof ApiError && error.code === 'NoSearchTerms') {
      root.append(
        el('p', {
          class: 'guidance',
          text: 'This entity has no name or label assertions to search with. Add a label first, then retry.',
        }),
      );
      return root;
    }
    throw error;
  }

  const list = el('ol', { class: 'candidates' });
  for (const candidate of response.candidates) {
    const card = el(
      'li',
      { class: 'candidate', 'data-target': candidate.target.iri },
      el(
        'header',
        { class: 'candidate-head' },
        el('span', { class: 'candidate-rank', text: `#${candidate.rank}` }),
        el('strong', { class: 'candidate-label', text: candidate.display_label }),
        el('span', { class: 'candidate-score', text: `score ${formatScore(candidate.score)}` }),
        iriAnchor(candidate.target, 'candidate-iri'),
      ),
    );
    if (candidate.types.length) {
      card.append(
        el('p', { class: 'candidate-types' }, ...candidate.types.map((t) => iriAnchor(t, 'type-chip'))),
      );
    }
    const context = el('dl', { class: 'candidate-context' });
    for (const pair of candidate.context) {
      context.append(
        el('dt', {}, iriAnchor(pair.predicate)),
        el('dd', { text: clip(termText(pair.value), 160) }),
      );
    }
    card.append(context);

    if (linked.has(candidate.target.iri)) {
      card.append(el('p', { class: 'linked-marker', text: 'linked (owl:sameAs)' }));
    } else {
      const accept = el('button', { class: 'accept-link', text: 'Accept as sameAs' });
      accept.addEventListener('click', async () => {
        await api.acceptLink(iri, candidate.target.iri, 'owl:sameAs');
        actions.refresh();
      });
      card.append(accept);
    }
    list.append(card);
  }
  root.append(
    response.candidates.length
      ? list
      : el('p', { class: 'empty-state', text: 'No candidates found for this entity.' }),
  );
  return root;
}

function formatScore(score: number): string {
  return Number.isInteger(score) ? String(score) : score.toFixed(3);
}

function clip(text: string, max: number): string {
  return text.length > max ? text.slice(0, max - 1) + '…' : text;
}
