import { ApiClient } from './api';
import { clear, el } from './dom';
import { parseHash, toHash, ViewState } from './state';
import { renderBrowse } from './views/browse';
import { renderEnhance } from './views/enhance';
import { renderEntity } from './views/entity';
import { renderLink } from './views/link';

export interface AppOptions {
  root: HTMLElement;
  apiBase: string;
  /** Defaults to window.location; injectable for tests. */
  getHash?: () => string;
  setHash?: (hash: string) => void;
}

/** The single-page app shell: routes the hash to a screen renderer.
 *
 * The app holds no authoritative state; every render starts from the hash
 * and rebuilds the screen from API responses, so reloading reproduces the
 * exact same view.
 */
export class App {
  readonly api: ApiClient;
  private root: HTMLElement;
  private getHash: () => string;
  private setHash: (hash: string) => void;
  private usesWindowHash: boolean;
  private rendering: Promise<void> = Promise.resolve();

  constructor(options: AppOptions) {
    this.api = new ApiClient(options.apiBase);
    this.root = options.root;
    this.usesWindowHash = options.getHash === undefined;
    this.getHash = options.getHash ?? (() => window.location.hash);
    this.setHash =
      options.setHash ??
      ((hash: string) => {
        window.location.hash = hash;
      });
  }

  start(): Promise<void> {
    if (this.usesWindowHash && typeof window !== 'undefined') {
      window.addEventListener('hashchange', () => void this.render());
    }
    return this.render();
  }

  navigate(state: ViewState): Promise<void> {
    this.setHash(toHash(state));
    return this.render();
  }

  /** Resolves when the current screen is fully rendered. */
  whenIdle(): Promise<void> {
    return this.rendering;
  }

  render(): Promise<void> {
    this.rendering = this.renderOnce();
    return this.rendering;
  }

  private async renderOnce(): Promise<void> {
    const state = parseHash(this.getHash());
    const navigate = (next: ViewState) => void this.navigate(next);
    const refresh = () => void this.render();

    let screen: HTMLElement;
    try {
      switch (state.screen) {
        case 'browse':
          screen = await renderBrowse(this.api, state, { navigate });
          break;
        case 'entity':
          screen = await renderEntity(this.api, state.selectedEntity!);
          break;
        case 'link':
          screen = await renderLink(this.api, state.selectedEntity!, state.algorithm, {
            navigate,
            refresh,
          });
          break;
        case 'enhance':
          screen = await renderEnhance(this.api, state.selectedEntity!, { refresh });
          break;
      }
    } catch (error) {
      screen = el(
        'section',
        { class: 'screen screen-error' },
        el('p', { class: 'service-error', text: `Service unreachable or request failed: ${String(error)}` }),
      );
    }

    const header = el(
      'header',
      { class: 'app-header' },
      el('a', { class: 'brand', href: '#/browse', text: 'lodlink' }),
      state.selectedEntity
        ? el(
            'nav',
            { class: 'screen-nav' },
            el('a', { href: `#/entity/${encodeURIComponent(state.selectedEntity)}`, text: 'overview' }),
            el('a', { href: `#/link/${encodeURIComponent(state.selectedEntity)}`, text: 'link' }),
            el('a', { href: `#/enhance/${encodeURIComponent(state.selectedEntity)}`, text: 'enhance' }),
          )
        : null,
    );

    clear(this.root);
    this.root.append(header, screen);
  }
}
