/**
 * Quiz player: renders one session question at a time, submits the
 * multi-select answer, and on error shows personalized explanations first,
 * then the general one.
 */

import type { AnswerFeedback, Question } from '../types';

export type AnswerSubmit = (
  questionId: string,
  selectedIds: string[],
) => Promise<AnswerFeedback> | AnswerFeedback;

export interface QuizPlayerOptions {
  onSubmit: AnswerSubmit;
  onFinished?: (correctCount: number) => void;
}

export function renderQuizPlayer(questions: Question[], opts: QuizPlayerOptions): HTMLElement {
  const root = document.createElement('div');
  root.className = 'quiz-player';
  let index = 0;
  let correctCount = 0;

  const progress = document.createElement('p');
  progress.className = 'quiz-progress';
  const stage = document.createElement('div');
  root.appendChild(progress);
  root.appendChild(stage);

  const showQuestion = () => {
    if (index >= questions.length) {
      progress.textContent = `Done: ${correctCount} / ${questions.length} correct`;
      stage.replaceChildren();
      opts.onFinished?.(correctCount);
      return;
    }
    progress.textContent = `Question ${index + 1} of ${questions.length}`;
    stage.replaceChildren(renderQuestion(questions[index]));
  };

  const renderQuestion = (question: Question): HTMLElement => {
    const form = document.createElement('form');
    form.className = 'quiz-question';
    form.dataset.questionId = question.question_id;
    const title = document.createElement('h3');
    title.textContent = question.title;
    form.appendChild(title);
    for (const prop of question.propositions) {
      const label = document.createElement('label');
      const input = document.createElement('input');
      input.type = 'checkbox';
      input.value = prop.proposition_id;
      label.appendChild(input);
      label.appendChild(document.createTextNode(prop.title));
      form.appendChild(label);
    }
    const feedback = document.createElement('div');
    feedback.className = 'quiz-feedback';
    const submit = document.createElement('button');
    submit.type = 'submit';
    submit.textContent = 'Answer';
    form.appendChild(submit);
    form.appendChild(feedback);

    form.addEventListener('submit', async (event) => {
      event.preventDefault();
      const selected = [...form.querySelectorAll<HTMLInputElement>('input:checked')].map(
        (i) => i.value,
      );
      const result = await opts.onSubmit(question.question_id, selected);
      feedback.replaceChildren();
      if (result.correct) {
        correctCount += 1;
        const ok = document.createElement('p');
        ok.className = 'feedback-correct';
        ok.textContent = 'Correct!';
        feedback.appendChild(ok);
      } else {
        for (const [, text] of result.per_proposition_feedback) {
          const line = document.createElement('p');
          line.className = 'feedback-personalized';
          line.textContent = text;
          feedback.appendChild(line);
        }
        if (result.general_explanation) {
          const general = document.createElement('p');
          general.className = 'feedback-general';
          general.textContent = result.general_explanation;
          feedback.appendChild(general);
        }
      }
      submit.replaceWith(nextButton());
    });
    return form;
  };

  const nextButton = (): HTMLElement => {
    const next = document.createElement('button');
    next.type = 'button';
    next.className = 'quiz-next';
    next.textContent = index + 1 < questions.length ? 'Next question' : 'Finish';
    next.addEventListener('click', () => {
      index += 1;
      showQuestion();
    });
    return next;
  };

  showQuestion();
  return root;
}
