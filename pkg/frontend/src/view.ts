// DOM rendering for the assistant grid. One render() pass rebuilds the
// board from the store; handlers mutate the store and the store re-renders.

import { SessionStore } from "./state.js";
import { TileColor } from "./colors.js";

const KEY_COLORS: Record<string, TileColor> = { "0": "grey", "1": "yellow", "2": "green" };

export function render(root: HTMLElement, store: SessionStore): void {
  root.innerHTML = "";
  const game = store.game;
  if (!game) return;

  const status = document.createElement("div");
  status.className = "status";
  status.textContent = store.solved
    ? "solved!"
    : `${store.candidateCount} candidate${store.candidateCount === 1 ? "" : "s"} remain`;
  root.appendChild(status);

  if (store.banner) {
    const banner = document.createElement("div");
    banner.className = "banner";
    banner.textContent = store.banner;
    root.appendChild(banner);
  }

  const grid = document.createElement("div");
  grid.className = "grid";
  for (const row of store.rows) {
    grid.appendChild(renderRow(row.guess, row.colors, null));
  }
  if (!store.solved && store.entryWord) {
    grid.appendChild(renderRow(store.entryWord, store.entryColors, store));
  }
  root.appendChild(grid);

  if (!store.solved) {
    root.appendChild(renderControls(store, game.wordLength));
  }

  if (store.sampleCandidates.length && !store.solved) {
    const samples = document.createElement("div");
    samples.className = "samples";
    samples.textContent = `possible: ${store.sampleCandidates.join(" ")}`;
    root.appendChild(samples);
  }
}

function renderRow(
  word: string,
  colors: readonly TileColor[],
  store: SessionStore | null
): HTMLElement {
  const row = document.createElement("div");
  row.className = store ? "row entry" : "row";
  for (let i = 0; i < word.length; i++) {
    const tile = document.createElement("button");
    tile.type = "button";
    tile.className = `tile ${colors[i]}`;
    tile.textContent = word[i];
    if (store) {
      tile.dataset.index = String(i);
      tile.addEventListener("click", () => store.cycleTile(i));
      tile.addEventListener("keydown", (e: KeyboardEvent) => {
        const c = KEY_COLORS[e.key];
        if (c) store.setTile(i, c);
      });
    } else {
      tile.disabled = true;
    }
    row.appendChild(tile);
  }
  return row;
}

function renderControls(store: SessionStore, wordLength: number): HTMLElement {
  const controls = document.createElement("div");
  controls.className = "controls";

  const override = document.createElement("input");
  override.className = "override";
  override.placeholder = `played a different word? type ${wordLength} letters`;
  override.maxLength = wordLength;
  controls.appendChild(override);

  const apply = document.createElement("button");
  apply.type = "button";
  apply.className = "apply-override";
  apply.textContent = "use word";
  apply.addEventListener("click", () => {
    if (!store.overrideGuess(override.value)) {
      override.classList.add("invalid");
    } else {
      override.classList.remove("invalid");
      override.value = "";
    }
  });
  controls.appendChild(apply);

  const submit = document.createElement("button");
  submit.type = "button";
  submit.className = "submit";
  submit.textContent = store.busy ? "…" : "submit colors";
  submit.disabled = store.busy;
  submit.addEventListener("click", () => void store.submit());
  controls.appendChild(submit);

  return controls;
}
