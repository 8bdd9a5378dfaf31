/**
 * Association game: two category zones; the learner assigns propositions
 * one by one and gets the personalized explanation on a wrong placement.
 */

import { checkAssociation } from '../play';
import type { AssociationGame } from '../types';

export interface AssociationOptions {
  onCompleted?: () => void;
}

export function renderAssociationView(
  game: AssociationGame,
  opts: AssociationOptions = {},
): HTMLElement {
  const root = document.createElement('div');
  root.className = 'association-view';
  const feedback = document.createElement('p');
  feedback.className = 'association-feedback';
  feedback.setAttribute('aria-live', 'polite');

  const zones = new Map<string, HTMLElement>();
  const zoneRow = document.createElement('div');
  zoneRow.className = 'association-zones';
  for (const category of game.categories) {
    const zone = document.createElement('div');
    zone.className = 'association-zone';
    zone.dataset.categoryId = category.category_id;
    const title = document.createElement('h3');
    title.textContent = category.title;
    zone.appendChild(title);
    zones.set(category.category_id, zone);
    zoneRow.appendChild(zone);
  }

  const pending = document.createElement('div');
  pending.className = 'association-pending';
  let placed = 0;

  for (const prop of game.propositions) {
    const item = document.createElement('div');
    item.className = 'association-proposition';
    item.dataset.propositionId = prop.proposition_id;
    const label = document.createElement('span');
    label.textContent = prop.title;
    item.appendChild(label);
    for (const category of game.categories) {
      const assign = document.createElement('button');
      assign.className = 'association-assign';
      assign.dataset.categoryId = category.category_id;
      assign.textContent = `→ ${category.title}`;
      assign.addEventListener('click', () => {
        const result = checkAssociation(game, prop.proposition_id, category.category_id);
        if (result.correct) {
          item.querySelectorAll('button').forEach((b) => b.remove());
          zones.get(category.category_id)!.appendChild(item);
          feedback.textContent = '';
          placed += 1;
          if (placed === game.propositions.length) {
            feedback.textContent = 'All placed, well done!';
            root.dataset.completed = 'true';
            opts.onCompleted?.();
          }
        } else {
          feedback.textContent = result.explanation ?? 'Not quite, try the other category.';
        }
      });
      item.appendChild(assign);
    }
    pending.appendChild(item);
  }

  root.appendChild(zoneRow);
  root.appendChild(pending);
  root.appendChild(feedback);
  return root;
}
