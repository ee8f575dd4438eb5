import { describe, expect, it } from "vitest";
import { canonicalJson } from "../src/canonical";

// Expected strings are frozen from the Python side's serializer
// (json.dumps(..., indent=2, sort_keys=True) + "\n"), so these tests pin
// byte-compatibility across the two languages.
describe("canonicalJson", () => {
  it("sorts keys and renders empty containers inline", () => {
    expect(canonicalJson({ b: [1, 2], a: {}, c: [] })).toBe(
      '{\n  "a": {},\n  "b": [\n    1,\n    2\n  ],\n  "c": []\n}\n',
    );
  });

  it("escapes non-ascii exactly like the service", () => {
    expect(canonicalJson({ display: "Z/2 \u2295 Z/2", free_rank: 0 })).toBe(
      '{\n  "display": "Z/2 \\u2295 Z/2",\n  "free_rank": 0\n}\n',
    );
  });

  it("keeps big-integer strings verbatim", () => {
    expect(canonicalJson({ rows: 1, cols: 2, data: [["9007199254740992", -3]] })).toBe(
      '{\n  "cols": 2,\n  "data": [\n    [\n      "9007199254740992",\n      -3\n    ]\n  ],\n  "rows": 1\n}\n',
    );
  });

  it("escapes quotes, backslashes and control characters", () => {
    expect(canonicalJson({ s: 'quote " backslash \\ newline \n tab \t' })).toBe(
      '{\n  "s": "quote \\" backslash \\\\ newline \\n tab \\t"\n}\n',
    );
  });

  it("handles nesting, booleans and null", () => {
    expect(canonicalJson({ nested: { z: [true, false, null], a: 0 } })).toBe(
      '{\n  "nested": {\n    "a": 0,\n    "z": [\n      true,\n      false,\n      null\n    ]\n  }\n}\n',
    );
  });

  it("round-trips through JSON.parse", () => {
    const obj = { rows: 2, cols: 2, data: [[0, 1], [-1, 0]], labels: ["a", "b"] };
    expect(JSON.parse(canonicalJson(obj))).toEqual(obj);
  });
});
