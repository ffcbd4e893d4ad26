import { beforeEach, describe, expect, it, vi } from "vitest";

import { AssistantApi, GameInfo } from "../src/api.js";
import { SessionStore } from "../src/state.js";

const MINI: GameInfo = {
  name: "mininerdle",
  wordLength: 6,
  alphabet: "*+-/0123456789=",
  guessCount: 206,
  secretCount: 206,
  available: true,
  words: ["4*7=28", "48/6=8", "10-2=8"],
};

function jsonResponse(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

describe("session store against a mocked server", () => {
  let store: SessionStore;
  let fetchMock: ReturnType<typeof vi.fn>;

  beforeEach(async () => {
    fetchMock = vi.fn();
    vi.stubGlobal("fetch", fetchMock);
    fetchMock.mockResolvedValueOnce(
      jsonResponse(201, {
        sessionId: "s1",
        game: "mininerdle",
        suggestion: "4*7=28",
        candidateCount: 206,
        sampleCandidates: ["1+9=10"],
        solved: false,
        transcript: [],
      })
    );
    store = new SessionStore(new AssistantApi("http://test"));
    await store.start(MINI);
  });

  it("shows exactly what the API reported", () => {
    expect(store.suggestion).toBe("4*7=28");
    expect(store.candidateCount).toBe(206);
    expect(store.entryWord).toBe("4*7=28");
    expect(store.entryColors).toHaveLength(6);
  });

  it("submits the edited colours as digits and folds in the reply", async () => {
    store.cycleTile(0); // grey -> yellow
    store.cycleTile(1);
    store.cycleTile(1); // grey -> green
    fetchMock.mockResolvedValueOnce(
      jsonResponse(200, {
        sessionId: "s1",
        game: "mininerdle",
        suggestion: "48/6=8",
        candidateCount: 11,
        sampleCandidates: ["48/6=8"],
        solved: false,
        transcript: [{ guess: "4*7=28", response: "120000" }],
      })
    );
    await store.submit();
    const [url, init] = fetchMock.mock.calls[1];
    expect(String(url)).toContain("/api/v1/sessions/s1/feedback");
    expect(JSON.parse((init as RequestInit).body as string)).toEqual({
      guess: "4*7=28",
      response: "120000",
    });
    expect(store.rows).toHaveLength(1);
    expect(store.candidateCount).toBe(11); // count shown equals the payload
    expect(store.suggestion).toBe("48/6=8");
    expect(store.banner).toBeNull();
  });

  it("recovers from a contradiction without losing state", async () => {
    fetchMock.mockResolvedValueOnce(
      jsonResponse(409, {
        detail: { error: "contradiction", message: "no secret matches", candidateCount: 0 },
      })
    );
    await store.submit();
    expect(store.banner).toMatch(/impossible combination/);
    expect(store.rows).toHaveLength(0); // nothing was committed
    expect(store.candidateCount).toBe(206); // untouched, ready for the retry
    expect(store.entryWord).toBe("4*7=28"); // colours stay up for editing
  });

  it("marks the session solved on an all-green row", async () => {
    for (let i = 0; i < 6; i++) {
      store.setTile(i, "green");
    }
    fetchMock.mockResolvedValueOnce(
      jsonResponse(200, {
        sessionId: "s1",
        game: "mininerdle",
        suggestion: null,
        candidateCount: 1,
        sampleCandidates: ["4*7=28"],
        solved: true,
        transcript: [{ guess: "4*7=28", response: "222222" }],
      })
    );
    await store.submit();
    expect(store.solved).toBe(true);
  });

  it("validates override words against the game list", () => {
    expect(store.overrideGuess("10-2=8")).toBe(true);
    expect(store.entryWord).toBe("10-2=8");
    expect(store.overrideGuess("0+0=99")).toBe(false); // not in the list
    expect(store.overrideGuess("4*7=2")).toBe(false); // wrong length
    expect(store.entryWord).toBe("10-2=8");
  });

  it("allows at most one in-flight submission", async () => {
    let release: (r: Response) => void = () => {};
    fetchMock.mockReturnValueOnce(new Promise((res) => (release = res)));
    const first = store.submit();
    const second = store.submit(); // ignored: busy
    release(
      jsonResponse(200, {
        sessionId: "s1",
        game: "mininerdle",
        suggestion: "48/6=8",
        candidateCount: 5,
        sampleCandidates: [],
        solved: false,
        transcript: [],
      })
    );
    await Promise.all([first, second]);
    expect(fetchMock.mock.calls.length).toBe(2); // start + one feedback
  });
});
