// fetch interception for component tests: canned JSON per route, with
// sequential payloads for polling flows, and a log of every request.

import { vi } from "vitest";

export interface RecordedRequest {
  method: string;
  path: string;
  body: unknown;
}

interface Route {
  payloads: unknown[];
  status: number;
}

export class MockApi {
  requests: RecordedRequest[] = [];
  private routes = new Map<string, Route>();

  route(method: string, path: string, payload: unknown, status = 200): this {
    this.routes.set(`${method} ${path}`, { payloads: [payload], status });
    return this;
  }

  // Successive calls consume the payloads in order; the last one repeats.
  routeSequence(method: string, path: string, payloads: unknown[]): this {
    this.routes.set(`${method} ${path}`, { payloads: [...payloads], status: 200 });
    return this;
  }

  install(): void {
    vi.stubGlobal(
      "fetch",
      async (input: RequestInfo | URL, init?: RequestInit) => {
        const path = String(input);
        const method = init?.method ?? "GET";
        const body = init?.body ? JSON.parse(String(init.body)) : null;
        this.requests.push({ method, path, body });

        const route = this.routes.get(`${method} ${path}`);
        let status: number;
        let payload: unknown;
        if (route === undefined) {
          status = 404;
          payload = {
            error: { code: "UNKNOWN_ID", message: `no route ${method} ${path}` },
          };
        } else {
          status = route.status;
          payload =
            route.payloads.length > 1
              ? route.payloads.shift()
              : route.payloads[0];
        }
        return {
          ok: status >= 200 && status < 300,
          status,
          json: async () => payload,
        } as Response;
      },
    );
  }

  pathsCalled(): string[] {
    return this.requests.map((r) => `${r.method} ${r.path}`);
  }

  bodyOf(method: string, path: string): unknown {
    const match = this.requests.find(
      (r) => r.method === method && r.path === path,
    );
    return match?.body;
  }
}

export async function flushMicrotasks(rounds = 10): Promise<void> {
  for (let i = 0; i < rounds; i++) {
    await Promise.resolve();
  }
}
