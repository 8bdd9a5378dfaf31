/** Thin client over the HTTP contract; all methods return parsed JSON. */

import type {
  AnswerFeedback,
  CatalogEntry,
  QuizSession,
  ResourceKind,
} from './types';

export interface ApiErrorBody {
  code: string;
  message: string;
  details?: unknown;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly body: ApiErrorBody,
  ) {
    super(`${body.code}: ${body.message}`);
  }
}

export interface ResourceEnvelope<T = unknown> {
  module_id: string;
  kind: ResourceKind;
  resolved_locale: string;
  fallback_used: boolean;
  document: T;
}

export interface SessionEnvelope extends QuizSession {
  seed: number;
  questions: Array<{ question_id: string; title: string; propositions: unknown[] }>;
  resolved_locale: string;
  fallback_used: boolean;
}

export class ApiClient {
  constructor(
    private readonly baseUrl = '',
    private token: string | null = null,
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  setToken(token: string | null): void {
    this.token = token;
  }

  private async request<T>(
    method: string,
    path: string,
    options: { body?: unknown; headers?: Record<string, string> } = {},
  ): Promise<T> {
    const headers: Record<string, string> = { ...options.headers };
    if (options.body !== undefined) headers['Content-Type'] = 'application/json';
    if (this.token) headers['Authorization'] = `Bearer ${this.token}`;
    const resp = await this.fetchFn(`${this.baseUrl}${path}`, {
      method,
      headers,
      body: options.body === undefined ? undefined : JSON.stringify(options.body),
    });
    const payload = await resp.json();
    if (!resp.ok) throw new ApiError(resp.status, payload.error ?? payload);
    return payload as T;
  }

  async login(login: string, password: string): Promise<{ token: string; role: string }> {
    const out = await this.request<{ token: string; role: string }>(
      'POST',
      '/api/v1/auth/login',
      { body: { login, password } },
    );
    this.token = out.token;
    return out;
  }

  catalog(lang?: string): Promise<{ modules: CatalogEntry[] }> {
    const qs = lang ? `?lang=${encodeURIComponent(lang)}` : '';
    return this.request('GET', `/api/v1/modules${qs}`);
  }

  resource<T = unknown>(
    moduleId: string,
    kind: ResourceKind,
    opts: { lang?: string; teacherMode?: boolean } = {},
  ): Promise<ResourceEnvelope<T>> {
    const qs = opts.lang ? `?lang=${encodeURIComponent(opts.lang)}` : '';
    const headers = opts.teacherMode ? { 'X-Teacher-Mode': 'true' } : undefined;
    return this.request('GET', `/api/v1/modules/${moduleId}/resources/${kind}${qs}`, { headers });
  }

  quizSession(
    moduleId: string,
    body: { answered_ids?: string[]; seed?: number; target_count?: number },
    lang?: string,
  ): Promise<SessionEnvelope> {
    const qs = lang ? `?lang=${encodeURIComponent(lang)}` : '';
    return this.request('POST', `/api/v1/modules/${moduleId}/quiz-session${qs}`, { body });
  }

  submitAnswer(
    moduleId: string,
    questionId: string,
    selectedIds: string[],
    lang?: string,
  ): Promise<AnswerFeedback> {
    const qs = lang ? `?lang=${encodeURIComponent(lang)}` : '';
    return this.request('POST', `/api/v1/modules/${moduleId}/answers${qs}`, {
      body: { question_id: questionId, selected_ids: selectedIds },
    });
  }

  assetUrl(assetId: string): string {
    return `${this.baseUrl}/api/v1/assets/${assetId}`;
  }

  putResource(moduleId: string, kind: ResourceKind, document: unknown): Promise<unknown> {
    return this.request('PUT', `/api/v1/authoring/modules/${moduleId}/resources/${kind}`, {
      body: document,
    });
  }

  putVariant(
    moduleId: string,
    kind: ResourceKind,
    locale: string,
    document: unknown,
    status: 'draft' | 'complete',
  ): Promise<unknown> {
    return this.request(
      'PUT',
      `/api/v1/authoring/modules/${moduleId}/resources/${kind}/variants/${locale}`,
      { body: { document, status } },
    );
  }

  translationsReport(): Promise<unknown> {
    return this.request('GET', '/api/v1/reports/translations');
  }
}
