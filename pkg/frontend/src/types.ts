/**
 * Document shapes mirroring the server's JSON wire format.
 *
 * Field names match the canonical serialization exactly; these types are
 * shared by the online API client and the offline pack loader.
 */

export type ElementCategory = 'water' | 'air' | 'earth' | 'energy';

export type ResourceKind =
  | 'lesson'
  | 'quiz'
  | 'memo_set'
  | 'association_game'
  | 'cycle_game_ref'
  | 'experiment_ref'
  | 'video_link'
  | 'pedagogical_support';

export type MemoMode = 'classical' | 'easy' | 'difficult';

export interface PictureRef {
  asset_id: string;
  alt_text: string;
}

export interface Proposition {
  proposition_id: string;
  title: string;
  // present only in authoring payloads; learner payloads are scrubbed
  validity?: boolean;
  personalized_explanation?: string | null;
}

export interface Question {
  question_id: string;
  title: string;
  explanation?: string | null;
  propositions: Proposition[];
}

export interface Quiz {
  questions: Question[];
}

export interface Tag {
  number: number;
  text: string;
  coord_h: number;
  coord_v: number;
}

export interface LessonPage {
  page_id: string;
  title: string;
  text: string;
  picture: PictureRef | null;
  caption: string | null;
  tags: Tag[];
  linked_question_ids: string[];
}

export interface Lesson {
  pages: LessonPage[];
}

export interface MemoTriplet {
  picture: PictureRef;
  title: string;
  definition: string;
}

export interface MemoSet {
  triplets: MemoTriplet[];
  enabled_modes: MemoMode[];
}

export interface AssociationCategory {
  category_id: string;
  title: string;
  picture: PictureRef | null;
}

export interface AssociationProposition {
  proposition_id: string;
  title: string;
  category_id: string;
  personalized_explanation?: string | null;
}

export interface AssociationGame {
  categories: AssociationCategory[];
  propositions: AssociationProposition[];
}

export interface PedagogicalSupport {
  body: string;
}

export interface CatalogEntry {
  module_id: string;
  category: ElementCategory;
  title: string;
  resolved_locale: string;
  fallback_used: boolean;
  resource_kinds: ResourceKind[];
}

export interface ModuleDocument {
  module_id: string;
  category: ElementCategory;
  source_locale: string;
  title: string;
  title_i18n: Record<string, string>;
  resources: Partial<Record<ResourceKind, unknown>>;
}

export interface VariantDocument {
  module_id: string;
  kind: ResourceKind;
  locale: string;
  status: 'draft' | 'complete' | 'stale';
  source_revision: number;
  document: unknown;
}

export interface QuizSession {
  question_ids: string[];
  covered_page_ids: string[];
}

export interface AnswerFeedback {
  correct: boolean;
  per_proposition_feedback: Array<[string, string]>;
  general_explanation: string | null;
}
