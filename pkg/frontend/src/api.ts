// Thin client over the review service. fetch is injectable for tests.

import type { CandidatesResponse, ReplayDocument, SelectionAck } from "./types.js";

export class ApiError extends Error {
    constructor(public status: number, message: string) {
        super(message);
    }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ReviewApi {
    constructor(
        private readonly base: string,
        private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
    ) {}

    private async getJson<T>(path: string): Promise<T> {
        const resp = await this.fetchImpl(this.base + path);
        const body = await resp.json();
        if (!resp.ok) {
            // Server validation messages are surfaced verbatim to the user.
            throw new ApiError(resp.status, body.error ?? `GET ${path} failed`);
        }
        return body as T;
    }

    async listRuns(): Promise<string[]> {
        const body = await this.getJson<{ runs: string[] }>("/runs");
        return body.runs;
    }

    candidates(run: string): Promise<CandidatesResponse> {
        return this.getJson(`/runs/${run}/candidates`);
    }

    async listTraces(run: string): Promise<string[]> {
        const body = await this.getJson<{ traces: string[] }>(`/runs/${run}/traces`);
        return body.traces;
    }

    trace(run: string, traceId: string): Promise<ReplayDocument> {
        return this.getJson(`/runs/${run}/traces/${traceId}`);
    }

    async submitSelection(
        run: string,
        subtype: string,
        iteration: number,
        candidateId: number,
    ): Promise<SelectionAck> {
        const resp = await this.fetchImpl(`${this.base}/runs/${run}/selection`, {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify({ subtype, iteration, candidate_id: candidateId }),
        });
        const body = await resp.json();
        if (!resp.ok) {
            throw new ApiError(resp.status, body.error ?? "selection rejected");
        }
        return body as SelectionAck;
    }
}
