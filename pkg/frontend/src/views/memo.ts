/**
 * Memory game: mode picker (only enabled modes get a button) and a
 * 12-card flip-two board; matched pairs stay revealed.
 */

import { checkMemoMatch, deriveMemoDeck, type MemoDeck } from '../play';
import type { MemoMode, MemoSet } from '../types';

const MODE_LABELS: Record<MemoMode, string> = {
  classical: 'Classical',
  easy: 'Easy',
  difficult: 'Difficult',
};

export interface MemoViewOptions {
  assetUrl: (assetId: string) => string;
  seed: bigint | number;
  onCompleted?: (mode: MemoMode) => void;
}

export function renderMemoView(memo: MemoSet, opts: MemoViewOptions): HTMLElement {
  const root = document.createElement('div');
  root.className = 'memo-view';
  const modeBar = document.createElement('div');
  modeBar.className = 'memo-modes';
  const boardHost = document.createElement('div');
  root.appendChild(modeBar);
  root.appendChild(boardHost);

  for (const mode of ['classical', 'easy', 'difficult'] as MemoMode[]) {
    if (!memo.enabled_modes.includes(mode)) continue;
    const button = document.createElement('button');
    button.className = 'memo-mode-button';
    button.dataset.mode = mode;
    button.textContent = MODE_LABELS[mode];
    button.addEventListener('click', () => {
      const deck = deriveMemoDeck(memo, mode, opts.seed);
      boardHost.replaceChildren(renderBoard(deck, opts));
    });
    modeBar.appendChild(button);
  }
  return root;
}

export function renderBoard(deck: MemoDeck, opts: MemoViewOptions): HTMLElement {
  const board = document.createElement('div');
  board.className = 'memo-board';
  board.dataset.mode = deck.mode;
  let firstPick: string | null = null;
  let matchedPairs = 0;
  let locked = false;

  const buttons = new Map<string, HTMLButtonElement>();
  for (const card of deck.cards) {
    const button = document.createElement('button');
    button.className = 'memo-card';
    button.dataset.cardId = card.card_id;
    button.dataset.state = 'hidden';
    button.addEventListener('click', () => {
      if (locked || button.dataset.state !== 'hidden') return;
      revealFace(button, card.face, card.content, opts);
      button.dataset.state = 'revealed';
      if (firstPick === null) {
        firstPick = card.card_id;
        return;
      }
      const a = firstPick;
      firstPick = null;
      if (checkMemoMatch(deck, a, card.card_id)) {
        buttons.get(a)!.dataset.state = 'matched';
        button.dataset.state = 'matched';
        matchedPairs += 1;
        if (matchedPairs === deck.cards.length / 2) opts.onCompleted?.(deck.mode);
      } else {
        locked = true;
        setTimeout(() => {
          hideFace(buttons.get(a)!);
          hideFace(button);
          locked = false;
        }, 700);
      }
    });
    buttons.set(card.card_id, button);
    board.appendChild(button);
  }
  return board;
}

function revealFace(
  button: HTMLButtonElement,
  face: 'picture' | 'title' | 'definition',
  content: string,
  opts: MemoViewOptions,
): void {
  button.replaceChildren();
  if (face === 'picture') {
    const img = document.createElement('img');
    img.src = opts.assetUrl(content);
    img.alt = '';
    button.appendChild(img);
  } else {
    button.textContent = content;
  }
}

function hideFace(button: HTMLButtonElement): void {
  button.replaceChildren();
  button.dataset.state = 'hidden';
}
