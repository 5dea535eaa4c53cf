import { IriRef } from './types';

type Child = Node | string | null | undefined;

export function el(
  tag: string,
  attrs: Record<string, string> = {},
  ...children: Child[]
): HTMLElement {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (key === 'text') {
      node.textContent = value;
    } else {
      node.setAttribute(key, value);
    }
  }
  for (const child of children) {
    if (child === null || child === undefined) continue;
    node.append(child instanceof Node ? child : document.createTextNode(child));
  }
  return node;
}

/** Compact IRI rendering with a clickable tooltip carrying the full URI. */
export function iriAnchor(ref: IriRef, cls = 'iri'): HTMLElement {
  return el('a', {
    class: cls,
    href: ref.iri,
    title: ref.iri,
    target: '_blank',
    rel: 'noopener',
    text: ref.compact ?? ref.iri,
  });
}

export function clear(node: HTMLElement): void {
  while (node.firstChild) {
    node.removeChild(node.firstChild);
  }
}
