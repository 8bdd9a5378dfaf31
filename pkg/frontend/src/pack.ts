/**
 * Offline pack loading.
 *
 * Exported packs are zip archives whose entries are always stored
 * uncompressed (that is what makes them byte-deterministic), so a tiny
 * central-directory reader is enough; compressed entries are rejected.
 */

import type {
  ElementCategory,
  ModuleDocument,
  ResourceKind,
  VariantDocument,
} from './types';

interface ZipEntry {
  name: string;
  data: Uint8Array;
}

const EOCD_SIG = 0x06054b50;
const CDIR_SIG = 0x02014b50;

function readStoredZip(bytes: Uint8Array): ZipEntry[] {
  const view = new DataView(bytes.buffer, bytes.byteOffset, bytes.byteLength);
  let eocd = -1;
  for (let i = bytes.length - 22; i >= 0; i--) {
    if (view.getUint32(i, true) === EOCD_SIG) {
      eocd = i;
      break;
    }
  }
  if (eocd < 0) throw new Error('not a zip archive');
  const count = view.getUint16(eocd + 10, true);
  let offset = view.getUint32(eocd + 16, true);
  const entries: ZipEntry[] = [];
  const decoder = new TextDecoder();
  for (let i = 0; i < count; i++) {
    if (view.getUint32(offset, true) !== CDIR_SIG) throw new Error('corrupt central directory');
    const method = view.getUint16(offset + 10, true);
    const size = view.getUint32(offset + 24, true);
    const nameLen = view.getUint16(offset + 28, true);
    const extraLen = view.getUint16(offset + 30, true);
    const commentLen = view.getUint16(offset + 32, true);
    const localOffset = view.getUint32(offset + 42, true);
    const name = decoder.decode(bytes.subarray(offset + 46, offset + 46 + nameLen));
    if (method !== 0) throw new Error(`unsupported compression for ${name}`);
    // local header: name/extra lengths can differ from the central record
    const lNameLen = view.getUint16(localOffset + 26, true);
    const lExtraLen = view.getUint16(localOffset + 28, true);
    const start = localOffset + 30 + lNameLen + lExtraLen;
    entries.push({ name, data: bytes.subarray(start, start + size) });
    offset += 46 + nameLen + extraLen + commentLen;
  }
  return entries;
}

export interface PackManifest {
  format_version: number;
  languages: Array<{ code: string; display_name: string }>;
  assets: Record<string, string>;
  stats: {
    module_count: number;
    resource_count: number;
    language_count: number;
    per_category: Record<ElementCategory, number>;
  };
}

export class LoadedPack {
  constructor(
    readonly manifest: PackManifest,
    readonly modules: Map<string, ModuleDocument>,
    readonly variants: VariantDocument[],
    readonly assets: Map<string, Uint8Array>,
  ) {}

  moduleIds(): string[] {
    return [...this.modules.keys()].sort();
  }

  /** Localized title with one-step fallback to the source title. */
  resolveTitle(moduleId: string, locale: string): { title: string; fallback: boolean } {
    const mod = this.modules.get(moduleId);
    if (!mod) throw new Error(`unknown module '${moduleId}'`);
    if (locale === mod.source_locale) return { title: mod.title, fallback: false };
    const localized = mod.title_i18n[locale];
    if (localized !== undefined) return { title: localized, fallback: false };
    return { title: mod.title, fallback: true };
  }

  /**
   * Resolve a resource document with the variant policy: a Complete variant
   * in the requested locale, else the source document.
   */
  resolveResource(
    moduleId: string,
    kind: ResourceKind,
    locale: string,
  ): { document: unknown; resolvedLocale: string; fallbackUsed: boolean } {
    const mod = this.modules.get(moduleId);
    if (!mod) throw new Error(`unknown module '${moduleId}'`);
    const source = mod.resources[kind];
    if (source === undefined) throw new Error(`module '${moduleId}' has no ${kind}`);
    if (locale !== mod.source_locale) {
      const variant = this.variants.find(
        (v) =>
          v.module_id === moduleId &&
          v.kind === kind &&
          v.locale === locale &&
          v.status === 'complete',
      );
      if (variant) {
        return { document: variant.document, resolvedLocale: locale, fallbackUsed: false };
      }
    }
    return {
      document: source,
      resolvedLocale: mod.source_locale,
      fallbackUsed: locale !== mod.source_locale,
    };
  }

  assetObjectUrl(assetId: string): string {
    const data = this.assets.get(assetId);
    if (!data) throw new Error(`unknown asset '${assetId}'`);
    const mediaType = this.manifest.assets[assetId] ?? 'application/octet-stream';
    return URL.createObjectURL(new Blob([data.slice().buffer], { type: mediaType }));
  }
}

export function loadPack(bytes: Uint8Array): LoadedPack {
  const decoder = new TextDecoder();
  const entries = readStoredZip(bytes);
  const byName = new Map(entries.map((e) => [e.name, e.data]));
  const manifestData = byName.get('manifest.json');
  if (!manifestData) throw new Error('pack has no manifest.json');
  const manifest = JSON.parse(decoder.decode(manifestData)) as PackManifest;
  if (manifest.format_version !== 1) {
    throw new Error(`unsupported pack format version ${manifest.format_version}`);
  }
  const modules = new Map<string, ModuleDocument>();
  const variants: VariantDocument[] = [];
  const assets = new Map<string, Uint8Array>();
  for (const { name, data } of entries) {
    if (name.startsWith('modules/')) {
      const mod = JSON.parse(decoder.decode(data)) as ModuleDocument;
      modules.set(mod.module_id, mod);
    } else if (name.startsWith('variants/')) {
      variants.push(JSON.parse(decoder.decode(data)) as VariantDocument);
    } else if (name.startsWith('assets/')) {
      assets.set(name.slice('assets/'.length), data);
    }
  }
  return new LoadedPack(manifest, modules, variants, assets);
}
