// Typed client for the mutwb session service.  The UI never computes a
// mutation itself: every displayed object comes from one of these calls.

import type { Json } from "./canonical";

export type MatrixObj = {
  rows: number;
  cols: number;
  data: (number | string)[][];
  labels?: string[];
};

export type QuiverObj = {
  vertices: string[];
  arrows: [string, string, number | string][];
};

export type TriangulationObj = {
  m: number;
  diagonals: [number, number][];
};

export type K0Obj = {
  free_rank: number;
  torsion: (number | string)[];
  display: string;
};

export type HistoryEntry = {
  type: "mutate" | "flip";
  k?: number;
  removed?: [number, number];
  inserted?: [number, number];
};

export type SessionPayload = {
  session_id: string;
  kind: "matrix" | "triangulation";
  current: MatrixObj | TriangulationObj;
  b: MatrixObj;
  quiver: QuiverObj;
  k0: K0Obj;
  history: HistoryEntry[];
};

export class ServiceError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

async function parseResponse(resp: Response): Promise<SessionPayload> {
  const body = (await resp.json()) as Json;
  if (!resp.ok) {
    const message =
      body && typeof body === "object" && !Array.isArray(body) && typeof body.error === "string"
        ? body.error
        : `service returned ${resp.status}`;
    throw new ServiceError(resp.status, message);
  }
  return body as unknown as SessionPayload;
}

export class ServiceClient {
  constructor(readonly baseUrl: string) {}

  private async post(path: string, body: unknown): Promise<SessionPayload> {
    const resp = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    return parseResponse(resp);
  }

  createSession(initial: { matrix?: MatrixObj; triangulation?: TriangulationObj }) {
    return this.post("/session", initial);
  }

  mutate(sessionId: string, k: number) {
    return this.post(`/session/${sessionId}/mutate`, { k });
  }

  flip(sessionId: string, diagonal: [number, number]) {
    return this.post(`/session/${sessionId}/flip`, { diagonal });
  }

  undo(sessionId: string) {
    return this.post(`/session/${sessionId}/undo`, {});
  }

  async get(sessionId: string): Promise<SessionPayload> {
    const resp = await fetch(`${this.baseUrl}/session/${sessionId}`);
    return parseResponse(resp);
  }
}
