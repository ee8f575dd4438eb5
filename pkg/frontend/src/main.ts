import { ExplorerApp } from "./app";

const HEXAGON_FAN = '{"m": 6, "diagonals": [[0, 2], [0, 3], [0, 4]]}';
const SAMPLE_MATRIX =
  '{"rows": 3, "cols": 3, "data": [[0, 1, 0], [-1, 0, 1], [0, -1, 0]], "labels": ["0", "1", "2"]}';

function boot(): void {
  const baseInput = document.getElementById("base-url") as HTMLInputElement;
  const root = document.getElementById("app")!;
  const app = new ExplorerApp(root, () => baseInput.value.replace(/\/+$/, ""));

  (document.getElementById("preset-fan") as HTMLButtonElement).addEventListener(
    "click",
    () => (app.input.value = HEXAGON_FAN),
  );
  (document.getElementById("preset-matrix") as HTMLButtonElement).addEventListener(
    "click",
    () => (app.input.value = SAMPLE_MATRIX),
  );
}

document.addEventListener("DOMContentLoaded", boot);
