/**
 * Teacher-mode surface: the toggle and the per-module pedagogical
 * support panel it gates.
 */

import type { UiSessionState } from '../state';
import type { PedagogicalSupport } from '../types';

export function renderTeacherToggle(state: UiSessionState): HTMLElement {
  const label = document.createElement('label');
  label.className = 'teacher-toggle';
  const input = document.createElement('input');
  input.type = 'checkbox';
  input.checked = state.teacherMode;
  input.addEventListener('change', () => state.setTeacherMode(input.checked));
  label.appendChild(input);
  label.appendChild(document.createTextNode('Teacher mode'));
  return label;
}

/**
 * Renders the support panel only when teacher mode is on; returns an empty
 * placeholder otherwise so callers can swap it in place unconditionally.
 */
export function renderSupportPanel(
  state: UiSessionState,
  support: PedagogicalSupport | null,
): HTMLElement {
  if (!state.teacherMode || support === null) {
    const placeholder = document.createElement('span');
    placeholder.className = 'support-placeholder';
    placeholder.hidden = true;
    return placeholder;
  }
  const panel = document.createElement('aside');
  panel.className = 'support-panel';
  const heading = document.createElement('h3');
  heading.textContent = 'Pedagogical support';
  panel.appendChild(heading);
  for (const line of support.body.split('\n')) {
    const p = document.createElement('p');
    p.textContent = line;
    panel.appendChild(p);
  }
  return panel;
}
