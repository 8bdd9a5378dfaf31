/**
 * Live authoring validation for the MINE editor.
 *
 * Mirrors the server's structural rules so authors get inline feedback
 * before saving; the server remains the authority and re-validates on write.
 */

import type { AssociationGame, Lesson, MemoSet, Question, Quiz } from './types';

export interface Violation {
  code: string;
  path: string;
  message: string;
}

const blank = (s: string | null | undefined): boolean => !s || s.trim().length === 0;

export function validateQuestion(q: Question, path = 'question'): Violation[] {
  const out: Violation[] = [];
  if (blank(q.title)) {
    out.push({ code: 'EMPTY_FIELD', path: `${path}/title`, message: 'title must not be blank' });
  }
  const m = q.propositions.length;
  if (m < 2 || m > 10) {
    out.push({
      code: 'PROPOSITION_COUNT',
      path,
      message: `a question needs 2 to 10 propositions, got ${m}`,
    });
  }
  if (!q.propositions.some((p) => p.validity)) {
    out.push({
      code: 'NO_VALID_PROPOSITION',
      path,
      message: 'at least one proposition must be valid',
    });
  }
  const seen = new Set<string>();
  for (const p of q.propositions) {
    if (seen.has(p.proposition_id)) {
      out.push({
        code: 'DUPLICATE_ID',
        path: `${path}/proposition/${p.proposition_id}`,
        message: 'duplicate proposition id',
      });
    }
    seen.add(p.proposition_id);
    if (blank(p.title)) {
      out.push({
        code: 'EMPTY_FIELD',
        path: `${path}/proposition/${p.proposition_id}/title`,
        message: 'proposition title must not be blank',
      });
    }
  }
  return out;
}

export function validateQuiz(quiz: Quiz): Violation[] {
  const out: Violation[] = [];
  if (quiz.questions.length === 0) {
    out.push({ code: 'QUESTION_COUNT', path: 'quiz', message: 'a quiz needs at least one question' });
  }
  for (const q of quiz.questions) {
    out.push(...validateQuestion(q, `quiz/${q.question_id}`));
  }
  return out;
}

export function validateLesson(lesson: Lesson, quiz: Quiz | null): Violation[] {
  const out: Violation[] = [];
  if (lesson.pages.length === 0) {
    out.push({ code: 'PAGE_COUNT', path: 'lesson', message: 'a lesson needs at least one page' });
  }
  const knownQuestions = new Set((quiz?.questions ?? []).map((q) => q.question_id));
  for (const page of lesson.pages) {
    const path = `lesson/${page.page_id}`;
    if (page.caption && !page.picture) {
      out.push({ code: 'CAPTION_WITHOUT_PICTURE', path, message: 'caption requires a picture' });
    }
    page.tags.forEach((tag, i) => {
      if (tag.coord_h < 0 || tag.coord_h > 1 || tag.coord_v < 0 || tag.coord_v > 1) {
        out.push({
          code: 'TAG_COORD_RANGE',
          path: `${path}/tag/${tag.number}`,
          message: 'tag coordinates must lie in [0, 1]',
        });
      }
      if (tag.number !== i + 1) {
        out.push({
          code: 'TAG_NUMBERING',
          path: `${path}/tag/${tag.number}`,
          message: `tags must be numbered 1..${page.tags.length} in order`,
        });
      }
    });
    for (const qid of page.linked_question_ids) {
      if (!knownQuestions.has(qid)) {
        out.push({
          code: 'PAGE_LINK_UNRESOLVED',
          path: `${path}/link/${qid}`,
          message: 'linked question does not exist in the quiz',
        });
      }
    }
  }
  return out;
}

export function validateMemoSet(memo: MemoSet): Violation[] {
  const out: Violation[] = [];
  if (memo.triplets.length !== 6) {
    out.push({
      code: 'MEMO_TRIPLET_COUNT',
      path: 'memo_set',
      message: `a memo set needs exactly 6 triplets, got ${memo.triplets.length}`,
    });
  }
  if (memo.enabled_modes.length === 0) {
    out.push({
      code: 'MEMO_MODE_SET_EMPTY',
      path: 'memo_set',
      message: 'at least one mode must be enabled',
    });
  }
  memo.triplets.forEach((t, i) => {
    if (blank(t.title) || blank(t.definition)) {
      out.push({
        code: 'EMPTY_FIELD',
        path: `memo_set/triplet/${i}`,
        message: 'triplet title and definition must not be blank',
      });
    }
  });
  return out;
}

export function validateAssociation(game: AssociationGame): Violation[] {
  const out: Violation[] = [];
  if (game.categories.length !== 2) {
    out.push({
      code: 'CATEGORY_COUNT',
      path: 'association_game',
      message: `an association game needs exactly 2 categories, got ${game.categories.length}`,
    });
  }
  if (game.propositions.length < 2) {
    out.push({
      code: 'ASSOCIATION_PROPOSITION_COUNT',
      path: 'association_game',
      message: 'an association game needs at least 2 propositions',
    });
  }
  const known = new Set(game.categories.map((c) => c.category_id));
  const used = new Set<string>();
  for (const p of game.propositions) {
    if (!known.has(p.category_id)) {
      out.push({
        code: 'CATEGORY_UNRESOLVED',
        path: `association_game/proposition/${p.proposition_id}`,
        message: 'proposition references an unknown category',
      });
    }
    used.add(p.category_id);
  }
  for (const c of game.categories) {
    if (!used.has(c.category_id)) {
      out.push({
        code: 'CATEGORY_UNUSED',
        path: `association_game/category/${c.category_id}`,
        message: 'category has no propositions',
      });
    }
  }
  return out;
}
