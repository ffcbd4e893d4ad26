import { AssistantApi } from "./api.js";
import { SessionStore } from "./state.js";
import { render } from "./view.js";

const API_BASE =
  new URLSearchParams(location.search).get("api") ?? "http://127.0.0.1:8000";

async function boot(): Promise<void> {
  const api = new AssistantApi(API_BASE);
  const store = new SessionStore(api);

  const picker = document.getElementById("game-picker") as HTMLSelectElement;
  const board = document.getElementById("board") as HTMLElement;
  store.subscribe(() => render(board, store));

  const games = (await api.games()).filter((g) => g.available);
  for (const g of games) {
    const opt = document.createElement("option");
    opt.value = g.name;
    opt.textContent = `${g.name} (${g.secretCount} secrets)`;
    picker.appendChild(opt);
  }

  const start = async () => {
    const game = games.find((g) => g.name === picker.value);
    if (game) await store.start(game);
  };
  picker.addEventListener("change", () => void start());
  (document.getElementById("new-session") as HTMLButtonElement).addEventListener(
    "click",
    () => void start()
  );
  await start();
}

void boot().catch((err) => {
  const board = document.getElementById("board");
  if (board) board.textContent = `failed to reach the assistant API: ${err}`;
});
