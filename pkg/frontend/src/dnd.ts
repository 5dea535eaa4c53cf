// Drag-and-drop payload, held in module state rather than DataTransfer so
// the interaction works identically in the browser and in DOM test runners.

import { TermJson } from './types';

export interface DragPayload {
  predicate: string;
  value: TermJson;
}

let current: DragPayload | null = null;

export function beginDrag(payload: DragPayload, root: ParentNode): void {
  current = payload;
  for (const zone of root.querySelectorAll('.drop-zone')) {
    zone.classList.add('drop-active');
  }
}

export function currentDrag(): DragPayload | null {
  return current;
}

export function endDrag(root: ParentNode): void {
  current = null;
  for (const zone of root.querySelectorAll('.drop-zone')) {
    zone.classList.remove('drop-active');
  }
}
