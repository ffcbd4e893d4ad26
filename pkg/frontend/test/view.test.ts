// @vitest-environment happy-dom
import { beforeEach, describe, expect, it, vi } from "vitest";

import { AssistantApi, GameInfo } from "../src/api.js";
import { SessionStore } from "../src/state.js";
import { render } from "../src/view.js";

const MINI: GameInfo = {
  name: "mininerdle",
  wordLength: 6,
  alphabet: "*+-/0123456789=",
  guessCount: 206,
  secretCount: 206,
  available: true,
  words: ["4*7=28", "48/6=8"],
};

function storeWithSession(): SessionStore {
  const store = new SessionStore({} as AssistantApi);
  store.game = MINI;
  store.sessionId = "s1";
  store.suggestion = "4*7=28";
  store.entryWord = "4*7=28";
  store.entryColors = Array(6).fill("grey");
  store.candidateCount = 206;
  store.sampleCandidates = ["1+9=10", "48/6=8"];
  return store;
}

describe("board rendering", () => {
  let root: HTMLElement;

  beforeEach(() => {
    document.body.innerHTML = "<div id='board'></div>";
    root = document.getElementById("board") as HTMLElement;
  });

  it("shows the candidate count and the entry row", () => {
    const store = storeWithSession();
    render(root, store);
    expect(root.querySelector(".status")?.textContent).toContain("206 candidates");
    const tiles = root.querySelectorAll(".row.entry .tile");
    expect(tiles).toHaveLength(6);
    expect([...tiles].map((t) => t.textContent).join("")).toBe("4*7=28");
  });

  it("click cycles a tile grey -> yellow -> green -> grey", () => {
    const store = storeWithSession();
    store.subscribe(() => render(root, store));
    render(root, store);
    const tile = () => root.querySelector(".row.entry .tile") as HTMLButtonElement;
    expect(tile().className).toContain("grey");
    tile().click();
    expect(tile().className).toContain("yellow");
    tile().click();
    expect(tile().className).toContain("green");
    tile().click();
    expect(tile().className).toContain("grey");
  });

  it("renders played rows as disabled tiles", () => {
    const store = storeWithSession();
    store.rows = [{ guess: "10-2=8", colors: Array(6).fill("yellow") }];
    render(root, store);
    const played = root.querySelectorAll(".row:not(.entry) .tile");
    expect(played).toHaveLength(6);
    expect((played[0] as HTMLButtonElement).disabled).toBe(true);
  });

  it("renders the contradiction banner and keeps controls usable", () => {
    const store = storeWithSession();
    store.banner = "impossible combination — check your colors";
    render(root, store);
    expect(root.querySelector(".banner")?.textContent).toMatch(/impossible combination/);
    expect(root.querySelector(".submit")).not.toBeNull();
  });

  it("marks invalid override words", () => {
    const store = storeWithSession();
    store.subscribe(() => render(root, store));
    render(root, store);
    const input = root.querySelector(".override") as HTMLInputElement;
    input.value = "0+0=99";
    (root.querySelector(".apply-override") as HTMLButtonElement).click();
    expect(
      (document.querySelector(".override") as HTMLInputElement).className
    ).toContain("invalid");
  });

  it("solved sessions show no entry row", () => {
    const store = storeWithSession();
    store.solved = true;
    render(root, store);
    expect(root.querySelector(".row.entry")).toBeNull();
    expect(root.querySelector(".status")?.textContent).toContain("solved");
  });
});
