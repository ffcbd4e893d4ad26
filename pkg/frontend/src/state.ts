// Session store: everything the grid needs to render, plus the actions the
// UI can take. Candidate math is never done here; the store only folds the
// server's answers into view state.

import { AssistantApi, ApiError, GameInfo, SessionState } from "./api.js";
import { TileColor, allGreen, colorsToDigits, nextColor } from "./colors.js";

export interface PlayedRow {
  guess: string;
  colors: TileColor[];
}

type Listener = () => void;

export class SessionStore {
  game: GameInfo | null = null;
  sessionId: string | null = null;
  rows: PlayedRow[] = [];
  entryWord = ""; // the word actually played (suggestion unless overridden)
  entryColors: TileColor[] = [];
  suggestion: string | null = null;
  candidateCount = 0;
  sampleCandidates: string[] = [];
  solved = false;
  banner: string | null = null;
  busy = false;

  private listeners: Listener[] = [];

  constructor(private api: AssistantApi) {}

  subscribe(fn: Listener): void {
    this.listeners.push(fn);
  }

  private emit(): void {
    for (const fn of this.listeners) fn();
  }

  async start(game: GameInfo): Promise<void> {
    this.game = game;
    const s = await this.api.newSession(game.name);
    this.sessionId = s.sessionId;
    this.rows = [];
    this.solved = false;
    this.banner = null;
    this.applyServerState(s);
  }

  private applyServerState(s: SessionState): void {
    this.suggestion = s.suggestion;
    this.candidateCount = s.candidateCount;
    this.sampleCandidates = s.sampleCandidates;
    this.solved = s.solved;
    this.entryWord = s.suggestion ?? "";
    this.entryColors = Array(this.game?.wordLength ?? 0).fill("grey");
    this.emit();
  }

  cycleTile(i: number): void {
    if (this.solved || i < 0 || i >= this.entryColors.length) return;
    this.entryColors[i] = nextColor(this.entryColors[i]);
    this.emit();
  }

  setTile(i: number, color: TileColor): void {
    if (this.solved || i < 0 || i >= this.entryColors.length) return;
    this.entryColors[i] = color;
    this.emit();
  }

  /** Swap in the word the player actually guessed; false if not playable. */
  overrideGuess(word: string): boolean {
    const w = word.trim().toUpperCase();
    if (!this.game) return false;
    if (w.length !== this.game.wordLength) return false;
    if (this.game.words && !this.game.words.includes(w)) return false;
    this.entryWord = w;
    this.banner = null;
    this.emit();
    return true;
  }

  async submit(): Promise<void> {
    if (!this.sessionId || this.busy || this.solved || !this.entryWord) return;
    this.busy = true;
    this.banner = null;
    this.emit();
    const played: PlayedRow = { guess: this.entryWord, colors: [...this.entryColors] };
    try {
      const s = await this.api.feedback(
        this.sessionId,
        played.guess,
        colorsToDigits(played.colors)
      );
      this.rows.push(played);
      this.applyServerState(s);
      if (allGreen(played.colors)) this.solved = true;
    } catch (err) {
      if (err instanceof ApiError && err.status === 409) {
        // keep the entered colours on screen so they can be fixed in place
        this.banner = "impossible combination — check your colors";
      } else if (err instanceof ApiError && err.status === 400) {
        this.banner = `rejected: ${JSON.stringify(err.detail)}`;
      } else {
        this.banner = "network error — try again";
      }
    } finally {
      this.busy = false;
      this.emit();
    }
  }
}
