import { ApiClient } from '../api';
import { el, iriAnchor } from '../dom';
import { ViewState } from '../state';

export interface BrowseActions {
  navigate(state: ViewState): void;
}

/** Search screen: keyword box with completion, type facets, result clusters. */
export async function renderBrowse(
  api: ApiClient,
  state: ViewState,
  actions: BrowseActions,
): Promise<HTMLElement> {
  const root = el('section', { class: 'screen screen-browse' });

  const input = el('input', {
    class: 'search-input',
    type: 'search',
    placeholder: 'Search, e.g. concept:thinker Wittgens',
    list: 'search-completions',
    value: state.query ?? '',
  }) as HTMLInputElement;
  const completions = el('datalist', { id: 'search-completions' });
  const form = el('form', { class: 'search-form' }, input, completions, el('button', { type: 'submit', text: 'Search' }));

  form.addEventListener('submit', (event) => {
    event.preventDefault();
    actions.navigate({ screen: 'browse', query: input.value });
  });
  input.addEventListener('input', async () => {
    const prefix = input.value.trim();
    if (!prefix) return;
    try {
      const suggestions = await api.autocomplete(prefix);
      completions.replaceChildren(...suggestions.map((s) => el('option', { value: s })));
    } catch {
      // completion is best-effort; search still works without it
    }
  });
  root.append(el('h2', { text: 'Browse' }), form);

  if (!state.query) {
    root.append(el('p', { class: 'hint', text: 'Enter a keyword to search the local repository.' }));
    return root;
  }

  const { clusters, facets } = await api.search(state.query);

  const facetBar = el('div', { class: 'facets' });
  for (const facet of facets) {
    const label = facet.compact?.split(':').pop() ?? facet.iri;
    const keyword = state.query.replace(/^\S+:\S+\s*/, '');
    const button = el('button', {
      class: 'facet',
      title: facet.iri,
      text: `${label} (${facet.count})`,
    });
    button.addEventListener('click', () =>
      actions.navigate({ screen: 'browse', query: `concept:${label} ${keyword}`.trim() }),
    );
    facetBar.append(button);
  }
  root.append(facetBar);

  const list = el('ul', { class: 'clusters' });
  for (const cluster of clusters) {
    const item = el(
      'li',
      { class: 'cluster', 'data-iri': cluster.representative.iri },
      el('a', {
        class: 'cluster-label',
        href: `#/entity/${encodeURIComponent(cluster.representative.iri)}`,
        text: cluster.display_label,
      }),
      el(
        'span',
        { class: 'cluster-types' },
        ...cluster.types.map((t) => iriAnchor(t, 'type-chip')),
      ),
      cluster.members.length > 1
        ? el('span', { class: 'cluster-size', text: `${cluster.members.length} equivalent records` })
        : null,
      iriAnchor(cluster.representative, 'cluster-iri'),
    );
    list.append(item);
  }
  if (!clusters.length) {
    root.append(el('p', { class: 'empty-state', text: 'No entities match this query.' }));
  } else {
    root.append(list);
  }
  return root;
}
