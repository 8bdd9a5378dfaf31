/**
 * Lesson player: paged text, interactive tagged picture, per-page self-test.
 *
 * Tag markers are positioned from the stored normalized coordinates;
 * clicking a marker reveals its text in a caption line below the image so
 * the content stays available to assistive technology as real text.
 */

import type { LessonPage, Question, Tag } from '../types';

export interface Viewport {
  width: number;
  height: number;
}

/** Pixel position of a tag's marker inside an image box of the given size. */
export function tagPixelPosition(tag: Tag, viewport: Viewport): { left: number; top: number } {
  return {
    left: Math.round(tag.coord_h * viewport.width),
    top: Math.round(tag.coord_v * viewport.height),
  };
}

export interface LessonPageOptions {
  assetUrl: (assetId: string) => string;
  /** Fixed image box size; markers are placed in px relative to it. */
  viewport?: Viewport;
  /** Self-test question picked for this page, if any. */
  selfTest?: Question | null;
  onAnswer?: (questionId: string, selectedIds: string[]) => void;
}

export function renderLessonPage(page: LessonPage, opts: LessonPageOptions): HTMLElement {
  const root = document.createElement('article');
  root.className = 'lesson-page';
  root.dataset.pageId = page.page_id;

  const heading = document.createElement('h2');
  heading.textContent = page.title;
  root.appendChild(heading);

  if (page.picture) {
    const figure = document.createElement('figure');
    figure.className = 'tagged-picture';
    figure.style.position = 'relative';
    if (opts.viewport) {
      figure.style.width = `${opts.viewport.width}px`;
      figure.style.height = `${opts.viewport.height}px`;
    }
    const img = document.createElement('img');
    img.src = opts.assetUrl(page.picture.asset_id);
    img.alt = page.picture.alt_text;
    figure.appendChild(img);

    const reveal = document.createElement('p');
    reveal.className = 'tag-reveal';
    reveal.setAttribute('aria-live', 'polite');

    for (const tag of page.tags) {
      const marker = document.createElement('button');
      marker.className = 'tag-marker';
      marker.dataset.tagNumber = String(tag.number);
      marker.textContent = String(tag.number);
      marker.setAttribute('aria-label', `Tag ${tag.number}`);
      marker.style.position = 'absolute';
      if (opts.viewport) {
        const pos = tagPixelPosition(tag, opts.viewport);
        marker.style.left = `${pos.left}px`;
        marker.style.top = `${pos.top}px`;
      } else {
        marker.style.left = `${tag.coord_h * 100}%`;
        marker.style.top = `${tag.coord_v * 100}%`;
      }
      marker.addEventListener('click', () => {
        reveal.textContent = `${tag.number}. ${tag.text}`;
      });
      figure.appendChild(marker);
    }
    if (page.caption) {
      const caption = document.createElement('figcaption');
      caption.textContent = page.caption;
      figure.appendChild(caption);
    }
    root.appendChild(figure);
    root.appendChild(reveal);
  }

  const text = document.createElement('div');
  text.className = 'lesson-text';
  for (const line of page.text.split('\n')) {
    const p = document.createElement('p');
    p.textContent = line;
    text.appendChild(p);
  }
  root.appendChild(text);

  if (opts.selfTest) {
    root.appendChild(renderSelfTest(opts.selfTest, opts.onAnswer));
  }
  return root;
}

function renderSelfTest(
  question: Question,
  onAnswer?: (questionId: string, selectedIds: string[]) => void,
): HTMLElement {
  const box = document.createElement('section');
  box.className = 'self-test';
  const title = document.createElement('h3');
  title.textContent = question.title;
  box.appendChild(title);
  const form = document.createElement('form');
  for (const prop of question.propositions) {
    const label = document.createElement('label');
    const input = document.createElement('input');
    input.type = 'checkbox';
    input.value = prop.proposition_id;
    input.name = 'self-test';
    label.appendChild(input);
    label.appendChild(document.createTextNode(prop.title));
    form.appendChild(label);
  }
  const submit = document.createElement('button');
  submit.type = 'submit';
  submit.textContent = 'Check';
  form.appendChild(submit);
  form.addEventListener('submit', (event) => {
    event.preventDefault();
    const selected = [...form.querySelectorAll<HTMLInputElement>('input:checked')].map(
      (i) => i.value,
    );
    onAnswer?.(question.question_id, selected);
  });
  box.appendChild(form);
  return box;
}
