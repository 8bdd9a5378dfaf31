/**
 * Local play engine for offline packs.
 *
 * Port of the server's session generation, answer evaluation, memo deck and
 * association checks. Parity with the server is pinned by golden vectors
 * (tests/golden/vectors.json) regenerated from the server test suite.
 */

import { SeededRng } from './rng';
import type {
  AnswerFeedback,
  AssociationGame,
  MemoMode,
  MemoSet,
  Question,
  Quiz,
  QuizSession,
} from './types';

export const DEFAULT_SESSION_SIZE = 5;

export type PageLinks = Array<[string, string[]]>;

export interface SessionRequest {
  quiz: Quiz;
  pageLinks?: PageLinks;
  answeredIds?: Set<string>;
  seed: bigint | number | string;
  targetCount?: number;
}

/**
 * Pick min(targetCount, n) distinct questions, one per lesson-page stratum
 * per round-robin pass; questions linked to no page form a final stratum.
 * While enough unanswered questions remain to fill the session, only
 * unanswered candidates are eligible; otherwise unanswered are preferred
 * within each stratum.
 */
export function generateQuizSession(req: SessionRequest): QuizSession {
  const n = req.quiz.questions.length;
  if (n === 0) throw new Error('cannot generate a session from an empty quiz');
  const target = req.targetCount ?? DEFAULT_SESSION_SIZE;
  const k = Math.min(target, n);
  const allIds = req.quiz.questions.map((q) => q.question_id);
  const pageLinks = req.pageLinks ?? [];
  const answered = req.answeredIds ?? new Set<string>();

  const linked = new Set<string>();
  const strata: string[][] = [];
  for (const [, qids] of pageLinks) {
    strata.push([...qids]);
    for (const q of qids) linked.add(q);
  }
  const unlinked = allIds.filter((q) => !linked.has(q));
  if (unlinked.length > 0) strata.push(unlinked);

  const rng = new SeededRng(req.seed);
  const unansweredTotal = allIds.filter((q) => !answered.has(q)).length;
  const avoidAnswered = unansweredTotal >= k;

  const selected: string[] = [];
  const selectedSet = new Set<string>();
  let progressed = true;
  while (selected.length < k && progressed) {
    progressed = false;
    for (const pool of strata) {
      if (selected.length >= k) break;
      let candidates = pool.filter((q) => !selectedSet.has(q));
      if (avoidAnswered) {
        candidates = candidates.filter((q) => !answered.has(q));
      } else {
        const fresh = candidates.filter((q) => !answered.has(q));
        if (fresh.length > 0) candidates = fresh;
      }
      if (candidates.length > 0) {
        const pick = rng.choice(candidates);
        selected.push(pick);
        selectedSet.add(pick);
        progressed = true;
      }
    }
  }
  if (selected.length < k) {
    const rest = allIds.filter((q) => !selectedSet.has(q));
    while (selected.length < k && rest.length > 0) {
      const pick = rng.choice(rest);
      rest.splice(rest.indexOf(pick), 1);
      selected.push(pick);
      selectedSet.add(pick);
    }
  }

  const covered = pageLinks
    .filter(([, qids]) => qids.some((q) => selectedSet.has(q)))
    .map(([pageId]) => pageId);
  return { question_ids: selected, covered_page_ids: covered };
}

/** Pick the page's self-test question, preferring unanswered ones. */
export function pickPageQuestion(
  pagePool: Question[],
  answeredIds: Set<string>,
  seed: bigint | number | string,
): Question {
  if (pagePool.length === 0) throw new Error('page has no linked questions');
  const rng = new SeededRng(seed);
  const fresh = pagePool.filter((q) => !answeredIds.has(q.question_id));
  return rng.choice(fresh.length > 0 ? fresh : pagePool);
}

/**
 * Multi-select semantics: correct iff the selected set equals the valid set.
 * Requires an unscrubbed question (offline pack documents carry validity).
 */
export function evaluateAnswer(question: Question, selectedIds: Set<string>): AnswerFeedback {
  const known = new Set(question.propositions.map((p) => p.proposition_id));
  for (const id of selectedIds) {
    if (!known.has(id)) throw new Error(`unknown proposition id: ${id}`);
  }
  const valid = new Set(
    question.propositions.filter((p) => p.validity).map((p) => p.proposition_id),
  );
  const equal =
    valid.size === selectedIds.size && [...valid].every((id) => selectedIds.has(id));
  if (equal) {
    return { correct: true, per_proposition_feedback: [], general_explanation: null };
  }
  const feedback: Array<[string, string]> = [];
  for (const p of question.propositions) {
    const wronglySelected = selectedIds.has(p.proposition_id) && !p.validity;
    const wronglyOmitted = !selectedIds.has(p.proposition_id) && !!p.validity;
    if ((wronglySelected || wronglyOmitted) && p.personalized_explanation) {
      feedback.push([p.proposition_id, p.personalized_explanation]);
    }
  }
  return {
    correct: false,
    per_proposition_feedback: feedback,
    general_explanation: question.explanation || null,
  };
}

export type CardFace = 'picture' | 'title' | 'definition';

export interface MemoCard {
  card_id: string;
  face: CardFace;
  content: string;
  pair_key: number;
}

export interface MemoDeck {
  mode: MemoMode;
  cards: MemoCard[];
}

const MODE_FACES: Record<MemoMode, [CardFace, CardFace]> = {
  classical: ['picture', 'picture'],
  easy: ['picture', 'title'],
  difficult: ['title', 'definition'],
};

function faceContent(triplet: MemoSet['triplets'][number], face: CardFace): string {
  if (face === 'picture') return triplet.picture.asset_id;
  if (face === 'title') return triplet.title;
  return triplet.definition;
}

/** Build the 12-card deck for one mode and shuffle it with the seed. */
export function deriveMemoDeck(
  memo: MemoSet,
  mode: MemoMode,
  seed: bigint | number | string,
): MemoDeck {
  if (!memo.enabled_modes.includes(mode)) {
    throw new Error(`mode '${mode}' is not enabled for this memo set`);
  }
  const faces = MODE_FACES[mode];
  const cards: Array<[CardFace, string, number]> = [];
  memo.triplets.forEach((triplet, pairKey) => {
    for (const face of faces) cards.push([face, faceContent(triplet, face), pairKey]);
  });
  const rng = new SeededRng(seed);
  rng.shuffle(cards);
  return {
    mode,
    cards: cards.map(([face, content, pairKey], i) => ({
      card_id: `card-${i}`,
      face,
      content,
      pair_key: pairKey,
    })),
  };
}

export function checkMemoMatch(deck: MemoDeck, a: string, b: string): boolean {
  if (a === b) throw new Error('cannot match a card with itself');
  const byId = new Map(deck.cards.map((c) => [c.card_id, c]));
  const cardA = byId.get(a);
  const cardB = byId.get(b);
  if (!cardA || !cardB) throw new Error(`unknown card id: ${cardA ? b : a}`);
  return cardA.pair_key === cardB.pair_key;
}

export interface AssociationFeedback {
  correct: boolean;
  explanation: string | null;
}

export function checkAssociation(
  game: AssociationGame,
  propositionId: string,
  chosenCategoryId: string,
): AssociationFeedback {
  if (!game.categories.some((c) => c.category_id === chosenCategoryId)) {
    throw new Error(`unknown category '${chosenCategoryId}'`);
  }
  const proposition = game.propositions.find((p) => p.proposition_id === propositionId);
  if (!proposition) throw new Error(`unknown proposition '${propositionId}'`);
  if (proposition.category_id === chosenCategoryId) {
    return { correct: true, explanation: null };
  }
  return { correct: false, explanation: proposition.personalized_explanation ?? null };
}
