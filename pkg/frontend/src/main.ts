/**
 * App shell: hash routing between catalog and module views, language and
 * teacher-mode controls, offline pack loading. Authoring entry points are
 * shown only when online and authenticated.
 */

import { ApiClient } from './api';
import { generateQuizSession, evaluateAnswer } from './play';
import { loadPack } from './pack';
import { UiSessionState } from './state';
import type { CatalogEntry, Lesson, PedagogicalSupport, Question, Quiz } from './types';
import { renderAssociationView } from './views/association';
import { renderCatalog } from './views/catalog';
import { renderLessonPage } from './views/lesson';
import { renderMemoView } from './views/memo';
import { renderQuizPlayer } from './views/quiz';
import { renderSupportPanel, renderTeacherToggle } from './views/support';

export function createApp(root: HTMLElement, api = new ApiClient()): UiSessionState {
  const state = new UiSessionState();
  const header = document.createElement('header');
  const content = document.createElement('main');
  root.appendChild(header);
  root.appendChild(content);

  const languageSelect = document.createElement('select');
  languageSelect.className = 'language-select';
  for (const code of ['en', 'fr', 'zh', 'es', 'pt-BR']) {
    const option = document.createElement('option');
    option.value = code;
    option.textContent = code;
    languageSelect.appendChild(option);
  }
  languageSelect.addEventListener('change', () => state.setLanguage(languageSelect.value));

  const packInput = document.createElement('input');
  packInput.type = 'file';
  packInput.accept = '.zip';
  packInput.className = 'pack-input';
  packInput.addEventListener('change', async () => {
    const file = packInput.files?.[0];
    if (!file) return;
    state.loadPack(loadPack(new Uint8Array(await file.arrayBuffer())));
  });

  header.appendChild(languageSelect);
  header.appendChild(renderTeacherToggle(state));
  header.appendChild(packInput);

  const route = async () => {
    const hash = window.location.hash.replace(/^#\/?/, '');
    const [view, moduleId, kind] = hash.split('/');
    try {
      if (!view || view === 'catalog') {
        content.replaceChildren(await catalogView());
      } else if (view === 'module' && moduleId && kind) {
        content.replaceChildren(await moduleView(moduleId, kind));
      } else {
        content.replaceChildren(errorView(`Unknown view '${view}'`));
      }
    } catch (err) {
      content.replaceChildren(errorView(err instanceof Error ? err.message : String(err)));
    }
  };

  const catalogView = async (): Promise<HTMLElement> => {
    let entries: CatalogEntry[];
    if (state.pack) {
      entries = state.pack.moduleIds().map((id) => {
        const mod = state.pack!.modules.get(id)!;
        const resolved = state.pack!.resolveTitle(id, state.language);
        return {
          module_id: id,
          category: mod.category,
          title: resolved.title,
          resolved_locale: resolved.fallback ? mod.source_locale : state.language,
          fallback_used: resolved.fallback,
          resource_kinds: Object.keys(mod.resources).filter(
            (k) => k !== 'pedagogical_support',
          ) as CatalogEntry['resource_kinds'],
        };
      });
    } else {
      entries = (await api.catalog(state.language)).modules;
    }
    return renderCatalog(entries, {
      onOpenModule: (id) => {
        window.location.hash = `#/module/${id}/lesson`;
      },
    });
  };

  const fetchDocument = async <T>(moduleId: string, kind: string): Promise<T> => {
    if (state.pack) {
      return state.pack.resolveResource(moduleId, kind as never, state.language)
        .document as T;
    }
    const envelope = await api.resource<T>(moduleId, kind as never, {
      lang: state.language,
      teacherMode: state.teacherMode,
    });
    return envelope.document;
  };

  const moduleView = async (moduleId: string, kind: string): Promise<HTMLElement> => {
    const wrapper = document.createElement('div');
    wrapper.className = 'module-view';
    if (state.teacherMode) {
      try {
        const support = await fetchDocument<PedagogicalSupport>(moduleId, 'pedagogical_support');
        wrapper.appendChild(renderSupportPanel(state, support));
      } catch {
        // module has no support document; panel stays absent
      }
    }
    if (kind === 'lesson') {
      const lesson = await fetchDocument<Lesson>(moduleId, 'lesson');
      for (const page of lesson.pages) {
        wrapper.appendChild(
          renderLessonPage(page, {
            assetUrl: (id) =>
              state.pack ? state.pack.assetObjectUrl(id) : api.assetUrl(id),
          }),
        );
      }
    } else if (kind === 'quiz') {
      wrapper.appendChild(await quizView(moduleId));
    } else if (kind === 'memo_set') {
      const memo = await fetchDocument<never>(moduleId, 'memo_set');
      wrapper.appendChild(
        renderMemoView(memo, {
          assetUrl: (id) => (state.pack ? state.pack.assetObjectUrl(id) : api.assetUrl(id)),
          seed: BigInt(Date.now()),
        }),
      );
    } else if (kind === 'association_game') {
      wrapper.appendChild(renderAssociationView(await fetchDocument(moduleId, 'association_game')));
    } else {
      wrapper.appendChild(errorView(`Unsupported resource '${kind}'`));
    }
    return wrapper;
  };

  const quizView = async (moduleId: string): Promise<HTMLElement> => {
    if (state.pack) {
      // offline: generate and evaluate locally from the packaged quiz
      const quiz = state.pack.resolveResource(moduleId, 'quiz', state.language)
        .document as Quiz;
      const seed = BigInt(Date.now());
      const session = generateQuizSession({ quiz, seed });
      const byId = new Map(quiz.questions.map((q) => [q.question_id, q]));
      const questions = session.question_ids.map((id) => byId.get(id)!);
      return renderQuizPlayer(questions, {
        onSubmit: (questionId, selectedIds) =>
          evaluateAnswer(byId.get(questionId)!, new Set(selectedIds)),
      });
    }
    const envelope = await api.quizSession(moduleId, {}, state.language);
    return renderQuizPlayer(envelope.questions as Question[], {
      onSubmit: (questionId, selectedIds) =>
        api.submitAnswer(moduleId, questionId, selectedIds, state.language),
    });
  };

  const errorView = (message: string): HTMLElement => {
    const p = document.createElement('p');
    p.className = 'error-view';
    p.textContent = message;
    return p;
  };

  state.subscribe(() => void route());
  window.addEventListener('hashchange', () => void route());
  void route();
  return state;
}
