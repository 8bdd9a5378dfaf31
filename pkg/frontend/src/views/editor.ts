/**
 * MINE authoring widgets: tag placement on a picture, a quiz question
 * editor with live validation, and the side-by-side translation view.
 */

import type { Question, Tag } from '../types';
import { validateQuestion, type Violation } from '../validation';

/** Convert a click inside an image box to normalized tag coordinates. */
export function normalizeClick(
  clickX: number,
  clickY: number,
  width: number,
  height: number,
): { coord_h: number; coord_v: number } {
  const clamp = (v: number) => Math.min(1, Math.max(0, v));
  return { coord_h: clamp(clickX / width), coord_v: clamp(clickY / height) };
}

export interface TagEditorOptions {
  imageUrl: string;
  width: number;
  height: number;
  tags: Tag[];
  onChange: (tags: Tag[]) => void;
}

export function renderTagEditor(opts: TagEditorOptions): HTMLElement {
  const root = document.createElement('div');
  root.className = 'tag-editor';
  const box = document.createElement('div');
  box.className = 'tag-editor-box';
  box.style.position = 'relative';
  box.style.width = `${opts.width}px`;
  box.style.height = `${opts.height}px`;
  const img = document.createElement('img');
  img.src = opts.imageUrl;
  img.alt = '';
  box.appendChild(img);

  const tags = [...opts.tags];
  const redraw = () => {
    box.querySelectorAll('.tag-marker').forEach((m) => m.remove());
    for (const tag of tags) {
      const marker = document.createElement('span');
      marker.className = 'tag-marker';
      marker.dataset.tagNumber = String(tag.number);
      marker.textContent = String(tag.number);
      marker.style.position = 'absolute';
      marker.style.left = `${Math.round(tag.coord_h * opts.width)}px`;
      marker.style.top = `${Math.round(tag.coord_v * opts.height)}px`;
      box.appendChild(marker);
    }
  };
  box.addEventListener('click', (event) => {
    const mouse = event as MouseEvent;
    const coords = normalizeClick(mouse.offsetX, mouse.offsetY, opts.width, opts.height);
    tags.push({ number: tags.length + 1, text: '', ...coords });
    redraw();
    opts.onChange([...tags]);
  });
  redraw();
  root.appendChild(box);
  return root;
}

export interface QuestionEditorOptions {
  question: Question;
  onSave: (question: Question) => void;
}

/**
 * Question editor shell: edits run through callers' own inputs; this view
 * owns the validation summary and refuses to save an invalid question.
 */
export function renderQuestionEditor(opts: QuestionEditorOptions): HTMLElement {
  const root = document.createElement('form');
  root.className = 'question-editor';
  const errors = document.createElement('ul');
  errors.className = 'validation-errors';
  const save = document.createElement('button');
  save.type = 'submit';
  save.textContent = 'Save question';
  root.appendChild(errors);
  root.appendChild(save);

  const showViolations = (violations: Violation[]) => {
    errors.replaceChildren();
    for (const v of violations) {
      const item = document.createElement('li');
      item.dataset.code = v.code;
      item.textContent = `${v.code}: ${v.message}`;
      errors.appendChild(item);
    }
  };
  showViolations(validateQuestion(opts.question));

  root.addEventListener('submit', (event) => {
    event.preventDefault();
    const violations = validateQuestion(opts.question);
    showViolations(violations);
    if (violations.length === 0) opts.onSave(opts.question);
  });
  return root;
}

export interface TranslationRowOptions {
  sourceLocale: string;
  targetLocale: string;
  sourceText: string;
  targetText: string;
  /** Locales this user may edit; others render read-only. */
  grantedLocales: string[] | 'all';
  onEdit?: (text: string) => void;
}

export function renderTranslationRow(opts: TranslationRowOptions): HTMLElement {
  const row = document.createElement('div');
  row.className = 'translation-row';
  const source = document.createElement('div');
  source.className = 'translation-source';
  source.lang = opts.sourceLocale;
  source.textContent = opts.sourceText;

  const editable =
    opts.grantedLocales === 'all' || opts.grantedLocales.includes(opts.targetLocale);
  const target = document.createElement('textarea');
  target.className = 'translation-target';
  target.lang = opts.targetLocale;
  target.value = opts.targetText;
  target.disabled = !editable;
  if (editable) {
    target.addEventListener('input', () => opts.onEdit?.(target.value));
  }
  row.appendChild(source);
  row.appendChild(target);
  return row;
}
