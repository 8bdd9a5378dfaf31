/** Shared UI session state: language, teacher mode, auth, loaded pack. */

import type { LoadedPack } from './pack';

export type StateListener = (state: UiSessionState) => void;

export class UiSessionState {
  language = 'en';
  teacherMode = false;
  token: string | null = null;
  role: string | null = null;
  pack: LoadedPack | null = null;

  private listeners: StateListener[] = [];

  get offline(): boolean {
    return this.pack !== null;
  }

  /** Authoring needs a live server; offline packs are read-only. */
  get authoringAvailable(): boolean {
    return !this.offline && this.token !== null;
  }

  subscribe(listener: StateListener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  setLanguage(code: string): void {
    this.language = code;
    this.notify();
  }

  setTeacherMode(on: boolean): void {
    this.teacherMode = on;
    this.notify();
  }

  setAuth(token: string | null, role: string | null): void {
    this.token = token;
    this.role = role;
    this.notify();
  }

  loadPack(pack: LoadedPack | null): void {
    this.pack = pack;
    this.notify();
  }

  private notify(): void {
    for (const listener of this.listeners) listener(this);
  }
}
