// Canonical JSON: sorted keys, two-space indent, non-ASCII escaped as
// \uXXXX, trailing newline.  Byte-for-byte the same output as the Python
// service and CLI produce, which is what makes "displayed matrix equals
// CLI replay" an exact string comparison instead of a fuzzy one.

export type Json = null | boolean | number | string | Json[] | { [key: string]: Json };

function escapeNonAscii(jsonText: string): string {
  return jsonText.replace(/[-￿]/g, (ch) =>
    "\\u" + ch.charCodeAt(0).toString(16).padStart(4, "0"),
  );
}

function emit(value: Json, indent: number): string {
  const pad = " ".repeat(indent);
  const inner = " ".repeat(indent + 2);
  if (value === null || typeof value === "boolean" || typeof value === "number") {
    return JSON.stringify(value);
  }
  if (typeof value === "string") {
    return escapeNonAscii(JSON.stringify(value));
  }
  if (Array.isArray(value)) {
    if (value.length === 0) return "[]";
    const items = value.map((v) => inner + emit(v, indent + 2));
    return "[\n" + items.join(",\n") + "\n" + pad + "]";
  }
  const keys = Object.keys(value).sort();
  if (keys.length === 0) return "{}";
  const items = keys.map(
    (k) => inner + escapeNonAscii(JSON.stringify(k)) + ": " + emit(value[k], indent + 2),
  );
  return "{\n" + items.join(",\n") + "\n" + pad + "}";
}

export function canonicalJson(value: Json): string {
  return emit(value, 0) + "\n";
}
