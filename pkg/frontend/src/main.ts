import { App } from './app';

const apiBase =
  (document.querySelector('meta[name="api-base"]') as HTMLMetaElement | null)?.content ?? '';

const root = document.getElementById('app');
if (root) {
  if (!window.location.hash) {
    window.location.hash = '#/browse';
  }
  void new App({ root, apiBase }).start();
}
