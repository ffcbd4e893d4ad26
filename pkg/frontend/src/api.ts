// Thin typed client for the assistant API. All game math lives on the
// server; this module never interprets responses beyond JSON decoding.

export interface GameInfo {
  name: string;
  wordLength: number;
  alphabet: string;
  guessCount: number | null;
  secretCount: number | null;
  available: boolean;
  words: string[] | null;
}

export interface SessionState {
  sessionId: string;
  game: string;
  suggestion: string | null;
  candidateCount: number;
  sampleCandidates: string[];
  solved: boolean;
  transcript: { guess: string; response: string }[];
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: unknown
  ) {
    super(`api error ${status}`);
  }
}

async function request<T>(base: string, path: string, init?: RequestInit): Promise<T> {
  const res = await fetch(base + path, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  if (res.status === 204) return undefined as T;
  const body = await res.json().catch(() => null);
  if (!res.ok) throw new ApiError(res.status, body?.detail ?? body);
  return body as T;
}

export class AssistantApi {
  constructor(public baseUrl: string) {}

  games(): Promise<GameInfo[]> {
    return request(this.baseUrl, "/api/v1/games");
  }

  newSession(game: string): Promise<SessionState> {
    return request(this.baseUrl, "/api/v1/sessions", {
      method: "POST",
      body: JSON.stringify({ game }),
    });
  }

  feedback(sessionId: string, guess: string, response: string): Promise<SessionState> {
    return request(this.baseUrl, `/api/v1/sessions/${sessionId}/feedback`, {
      method: "POST",
      body: JSON.stringify({ guess, response }),
    });
  }

  deleteSession(sessionId: string): Promise<void> {
    return request(this.baseUrl, `/api/v1/sessions/${sessionId}`, { method: "DELETE" });
  }
}
