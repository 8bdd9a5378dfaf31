/**
 * Seeded RNG (splitmix64), matching the server implementation bit for bit.
 *
 * Sessions and memo decks generated offline must be identical to what the
 * server would produce for the same seed, so this uses 64-bit BigInt
 * arithmetic rather than Math.random.
 */

const MASK = (1n << 64n) - 1n;
const GAMMA = 0x9e3779b97f4a7c15n;
const MIX1 = 0xbf58476d1ce4e5b9n;
const MIX2 = 0x94d049bb133111ebn;

export class SeededRng {
  private state: bigint;

  constructor(seed: bigint | number | string) {
    this.state = BigInt(seed) & MASK;
  }

  nextU64(): bigint {
    this.state = (this.state + GAMMA) & MASK;
    let z = this.state;
    z = ((z ^ (z >> 30n)) * MIX1) & MASK;
    z = ((z ^ (z >> 27n)) * MIX2) & MASK;
    return (z ^ (z >> 31n)) & MASK;
  }

  /** Uniform integer in [0, n) via 64-bit multiply-shift. */
  below(n: number): number {
    if (n <= 0) throw new RangeError('n must be positive');
    return Number((this.nextU64() * BigInt(n)) >> 64n);
  }

  choice<T>(seq: readonly T[]): T {
    if (seq.length === 0) throw new RangeError('empty sequence');
    return seq[this.below(seq.length)];
  }

  /** In-place Fisher-Yates. */
  shuffle<T>(items: T[]): void {
    for (let i = items.length - 1; i > 0; i--) {
      const j = this.below(i + 1);
      [items[i], items[j]] = [items[j], items[i]];
    }
  }
}
