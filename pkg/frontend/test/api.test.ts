import assert from "node:assert/strict";
import { test } from "node:test";

import { ApiError, ReviewApi } from "../src/api.js";

interface Recorded {
    url: string;
    init?: RequestInit;
}

function fakeFetch(responses: Record<string, { status: number; body: unknown }>, log: Recorded[]) {
    return async (url: string, init?: RequestInit): Promise<Response> => {
        log.push({ url, init });
        const key = url.replace(/^https?:\/\/[^/]+/, "");
        const match = responses[key];
        if (!match) {
            return new Response(JSON.stringify({ error: `no route for '${key}'` }), { status: 404 });
        }
        return new Response(JSON.stringify(match.body), { status: match.status });
    };
}

test("submitSelection posts the documented body shape", async () => {
    const log: Recorded[] = [];
    const api = new ReviewApi(
        "http://service",
        fakeFetch(
            {
                "/runs/demo/selection": {
                    status: 200,
                    body: { ok: true, subtype: "left_sparse", iteration: 0, candidate_id: 1 },
                },
            },
            log,
        ),
    );
    const ack = await api.submitSelection("demo", "left_sparse", 0, 1);
    assert.equal(ack.candidate_id, 1);
    assert.equal(log[0].init?.method, "POST");
    assert.deepEqual(JSON.parse(String(log[0].init?.body)), {
        subtype: "left_sparse",
        iteration: 0,
        candidate_id: 1,
    });
});

test("double submit of the same id is an idempotent confirmation", async () => {
    const log: Recorded[] = [];
    const api = new ReviewApi(
        "http://service",
        fakeFetch(
            {
                "/runs/demo/selection": {
                    status: 200,
                    body: { ok: true, subtype: "left_sparse", iteration: 0, candidate_id: 1 },
                },
            },
            log,
        ),
    );
    const first = await api.submitSelection("demo", "left_sparse", 0, 1);
    const second = await api.submitSelection("demo", "left_sparse", 0, 1);
    assert.deepEqual(first, second);
    assert.equal(log.length, 2);
});

test("server validation errors surface verbatim", async () => {
    const api = new ReviewApi(
        "http://service",
        fakeFetch(
            {
                "/runs/demo/selection": {
                    status: 422,
                    body: { error: "candidate 42 is not a valid candidate of this set" },
                },
            },
            [],
        ),
    );
    await assert.rejects(
        api.submitSelection("demo", "left_sparse", 0, 42),
        (err: unknown) =>
            err instanceof ApiError &&
            err.status === 422 &&
            err.message === "candidate 42 is not a valid candidate of this set",
    );
});

test("listRuns and candidates unwrap their payloads", async () => {
    const api = new ReviewApi(
        "http://service",
        fakeFetch(
            {
                "/runs": { status: 200, body: { runs: ["a", "b"] } },
                "/runs/a/candidates": {
                    status: 200,
                    body: { run: "a", subtypes: { left_sparse: [] } },
                },
            },
            [],
        ),
    );
    assert.deepEqual(await api.listRuns(), ["a", "b"]);
    const body = await api.candidates("a");
    assert.ok("left_sparse" in body.subtypes);
});
