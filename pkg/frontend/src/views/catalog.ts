/** Catalog view: one section per element category, module tiles inside. */

import type { CatalogEntry, ElementCategory } from '../types';

const CATEGORY_ORDER: ElementCategory[] = ['water', 'air', 'earth', 'energy'];

const CATEGORY_LABELS: Record<ElementCategory, string> = {
  water: 'Water',
  air: 'Air',
  earth: 'Earth',
  energy: 'Energy',
};

export interface CatalogOptions {
  onOpenModule?: (moduleId: string) => void;
}

export function renderCatalog(entries: CatalogEntry[], opts: CatalogOptions = {}): HTMLElement {
  const root = document.createElement('div');
  root.className = 'catalog';
  if (entries.length === 0) {
    const empty = document.createElement('p');
    empty.className = 'empty-state';
    empty.textContent = 'No modules available yet.';
    root.appendChild(empty);
    return root;
  }
  for (const category of CATEGORY_ORDER) {
    const inCategory = entries.filter((e) => e.category === category);
    if (inCategory.length === 0) continue;
    const section = document.createElement('section');
    section.className = 'category-section';
    section.dataset.category = category;
    const heading = document.createElement('h2');
    heading.textContent = CATEGORY_LABELS[category];
    section.appendChild(heading);
    const grid = document.createElement('div');
    grid.className = 'tile-grid';
    for (const entry of inCategory) {
      const tile = document.createElement('button');
      tile.className = 'module-tile';
      tile.dataset.moduleId = entry.module_id;
      tile.textContent = entry.title;
      if (entry.fallback_used) {
        const badge = document.createElement('span');
        badge.className = 'fallback-badge';
        badge.textContent = entry.resolved_locale;
        badge.title = 'Shown in the source language; no translation yet.';
        tile.appendChild(badge);
      }
      tile.addEventListener('click', () => opts.onOpenModule?.(entry.module_id));
      grid.appendChild(tile);
    }
    section.appendChild(grid);
    root.appendChild(section);
  }
  return root;
}
