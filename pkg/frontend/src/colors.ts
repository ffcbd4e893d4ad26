// Tile colours and their wire encoding. The response digits are the single
// source of truth: 0 grey, 1 yellow, 2 green, one digit per position.

export type TileColor = "grey" | "yellow" | "green";

export const CYCLE: readonly TileColor[] = ["grey", "yellow", "green"];

const TO_DIGIT: Record<TileColor, string> = { grey: "0", yellow: "1", green: "2" };
const FROM_DIGIT: Record<string, TileColor> = { "0": "grey", "1": "yellow", "2": "green" };

export function nextColor(c: TileColor): TileColor {
  return CYCLE[(CYCLE.indexOf(c) + 1) % CYCLE.length];
}

export function colorsToDigits(colors: readonly TileColor[]): string {
  return colors.map((c) => TO_DIGIT[c]).join("");
}

export function digitsToColors(digits: string): TileColor[] {
  return [...digits].map((d) => {
    const c = FROM_DIGIT[d];
    if (!c) throw new Error(`not a response digit: ${d}`);
    return c;
  });
}

export function allGreen(colors: readonly TileColor[]): boolean {
  return colors.length > 0 && colors.every((c) => c === "green");
}
