// Screen routing: the whole view state lives in the URL hash, so a reload
// always reproduces the screen from API responses alone.

export type Screen = 'browse' | 'entity' | 'link' | 'enhance';

export interface ViewState {
  screen: Screen;
  selectedEntity?: string;
  query?: string;
  algorithm?: string;
}

export function parseHash(hash: string): ViewState {
  const raw = hash.replace(/^#\/?/, '');
  const [pathPart, queryPart] = raw.split('?', 2);
  const params = new URLSearchParams(queryPart ?? '');
  const [screen, ...rest] = pathPart.split('/');
  const entity = rest.length ? decodeURIComponent(rest.join('/')) : undefined;

  switch (screen) {
    case 'entity':
    case 'link':
    case 'enhance':
      // link and enhance screens require a selected entity
      if (!entity) {
        return { screen: 'browse', query: params.get('q') ?? undefined };
      }
      return {
        screen,
        selectedEntity: entity,
        algorithm: params.get('algorithm') ?? undefined,
      };
    default:
      return { screen: 'browse', query: params.get('q') ?? undefined };
  }
}

export function toHash(state: ViewState): string {
  switch (state.screen) {
    case 'browse': {
      const q = state.query ? `?q=${encodeURIComponent(state.query)}` : '';
      return `#/browse${q}`;
    }
    case 'entity':
      return `#/entity/${encodeURIComponent(state.selectedEntity!)}`;
    case 'link': {
      const alg = state.algorithm ? `?algorithm=${state.algorithm}` : '';
      return `#/link/${encodeURIComponent(state.selectedEntity!)}${alg}`;
    }
    case 'enhance':
      return `#/enhance/${encodeURIComponent(state.selectedEntity!)}`;
  }
}
