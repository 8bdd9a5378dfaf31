import { describe, expect, it, vi } from 'vitest';

import { renderAssociationView } from '../src/views/association';
import { renderMemoView } from '../src/views/memo';
import { deriveMemoDeck } from '../src/play';
import { renderQuizPlayer } from '../src/views/quiz';
import type { AnswerFeedback, MemoSet, Question } from '../src/types';

const QUESTIONS: Question[] = [
  {
    question_id: 'q1',
    title: 'Which layer comes first?',
    propositions: [
      { proposition_id: 'a', title: 'Sand' },
      { proposition_id: 'b', title: 'Gravel' },
    ],
  },
];

describe('quiz player', () => {
  it('never renders answer data before submission', () => {
    const root = renderQuizPlayer(QUESTIONS, {
      onSubmit: () => ({
        correct: true,
        per_proposition_feedback: [],
        general_explanation: null,
      }),
    });
    expect(root.innerHTML).not.toContain('validity');
    expect(root.querySelector('.quiz-feedback')!.textContent).toBe('');
  });

  it('shows personalized explanations before the general one on error', async () => {
    const feedback: AnswerFeedback = {
      correct: false,
      per_proposition_feedback: [['b', 'Gravel is the coarse layer.']],
      general_explanation: 'Order follows grain size.',
    };
    const root = renderQuizPlayer(QUESTIONS, { onSubmit: () => feedback });
    const form = root.querySelector<HTMLFormElement>('form')!;
    form.querySelector<HTMLInputElement>('input[value="b"]')!.checked = true;
    form.dispatchEvent(new Event('submit'));
    await vi.waitFor(() => {
      const lines = [...root.querySelectorAll('.quiz-feedback p')];
      expect(lines.length).toBe(2);
      expect(lines[0].className).toBe('feedback-personalized');
      expect(lines[0].textContent).toBe('Gravel is the coarse layer.');
      expect(lines[1].className).toBe('feedback-general');
      expect(lines[1].textContent).toBe('Order follows grain size.');
    });
  });

  it('counts correct answers and reports completion', async () => {
    let finished = -1;
    const root = renderQuizPlayer(QUESTIONS, {
      onSubmit: () => ({
        correct: true,
        per_proposition_feedback: [],
        general_explanation: null,
      }),
      onFinished: (n) => {
        finished = n;
      },
    });
    const form = root.querySelector<HTMLFormElement>('form')!;
    form.dispatchEvent(new Event('submit'));
    await vi.waitFor(() => {
      expect(root.querySelector<HTMLButtonElement>('.quiz-next')).not.toBeNull();
    });
    root.querySelector<HTMLButtonElement>('.quiz-next')!.click();
    expect(finished).toBe(1);
    expect(root.querySelector('.quiz-progress')!.textContent).toContain('1 / 1');
  });
});

function memoSet(modes: MemoSet['enabled_modes']): MemoSet {
  return {
    triplets: Array.from({ length: 6 }, (_, i) => ({
      picture: { asset_id: `sha256-pic${i}`, alt_text: '' },
      title: `title ${i}`,
      definition: `definition ${i}`,
    })),
    enabled_modes: modes,
  };
}

describe('memo view', () => {
  const opts = { assetUrl: (id: string) => `/assets/${id}`, seed: 9n };

  it('hides buttons for disabled modes', () => {
    const root = renderMemoView(memoSet(['classical']), opts);
    const buttons = [...root.querySelectorAll<HTMLElement>('.memo-mode-button')];
    expect(buttons.map((b) => b.dataset.mode)).toEqual(['classical']);
  });

  it('a classical board has 12 cards', () => {
    const root = renderMemoView(memoSet(['classical', 'easy', 'difficult']), opts);
    root.querySelector<HTMLButtonElement>('[data-mode="classical"]')!.click();
    expect(root.querySelectorAll('.memo-card').length).toBe(12);
  });

  it('a matched pair stays revealed and a mismatch flips back', () => {
    vi.useFakeTimers();
    const memo = memoSet(['easy']);
    const root = renderMemoView(memo, opts);
    root.querySelector<HTMLButtonElement>('[data-mode="easy"]')!.click();
    // the board uses the same seed, so an independent derivation tells us
    // which card ids pair up
    const deck = deriveMemoDeck(memo, 'easy', opts.seed);
    const byKey = new Map<number, string[]>();
    for (const card of deck.cards) {
      byKey.set(card.pair_key, [...(byKey.get(card.pair_key) ?? []), card.card_id]);
    }
    const button = (id: string) =>
      root.querySelector<HTMLButtonElement>(`[data-card-id="${id}"]`)!;
    const [a, b] = byKey.get(0)!;
    button(a).click();
    button(b).click();
    expect(button(a).dataset.state).toBe('matched');
    expect(button(b).dataset.state).toBe('matched');
    const [c] = byKey.get(1)!;
    const [d] = byKey.get(2)!;
    button(c).click();
    button(d).click();
    vi.runAllTimers();
    expect(button(c).dataset.state).toBe('hidden');
    expect(button(d).dataset.state).toBe('hidden');
    expect(button(a).dataset.state).toBe('matched');
    vi.useRealTimers();
  });
});

describe('association view', () => {
  const game = {
    categories: [
      { category_id: 'cat-a', title: 'Renewable', picture: null },
      { category_id: 'cat-b', title: 'Fossil', picture: null },
    ],
    propositions: [
      { proposition_id: 'p1', title: 'Wind', category_id: 'cat-a' },
      {
        proposition_id: 'p2',
        title: 'Coal',
        category_id: 'cat-b',
        personalized_explanation: 'Coal took millions of years to form.',
      },
    ],
  };

  it('accepts a correct placement into the zone', () => {
    const root = renderAssociationView(game);
    const item = root.querySelector<HTMLElement>('[data-proposition-id="p1"]')!;
    item.querySelector<HTMLButtonElement>('[data-category-id="cat-a"]')!.click();
    const zone = root.querySelector('[data-category-id="cat-a"].association-zone')!;
    expect(zone.contains(item)).toBe(true);
  });

  it('a wrong placement shows the personalized explanation', () => {
    const root = renderAssociationView(game);
    const item = root.querySelector<HTMLElement>('[data-proposition-id="p2"]')!;
    item.querySelector<HTMLButtonElement>('[data-category-id="cat-a"]')!.click();
    expect(root.querySelector('.association-feedback')!.textContent).toBe(
      'Coal took millions of years to form.',
    );
  });

  it('reports completion when all propositions are placed', () => {
    let completed = false;
    const root = renderAssociationView(game, {
      onCompleted: () => {
        completed = true;
      },
    });
    root
      .querySelector<HTMLElement>('[data-proposition-id="p1"]')!
      .querySelector<HTMLButtonElement>('[data-category-id="cat-a"]')!
      .click();
    root
      .querySelector<HTMLElement>('[data-proposition-id="p2"]')!
      .querySelector<HTMLButtonElement>('[data-category-id="cat-b"]')!
      .click();
    expect(completed).toBe(true);
    expect(root.dataset.completed).toBe('true');
  });
});
