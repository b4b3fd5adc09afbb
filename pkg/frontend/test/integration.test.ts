// End-to-end test against the real review service: a child python process
// serves the checked-in mini run; the client fetches the 20-step trace and
// posts a selection, which must land in the run's selections.json (the file
// the pipeline's winner selection consumes on its next iteration).

import assert from "node:assert/strict";
import { spawn, spawnSync } from "node:child_process";
import { existsSync, readFileSync, rmSync } from "node:fs";
import path from "node:path";
import { test } from "node:test";
import { fileURLToPath } from "node:url";

import { ReviewApi } from "../src/api.js";
import { ReplayController } from "../src/replay.js";

const here = path.dirname(fileURLToPath(import.meta.url));
const repoRoot = path.resolve(here, "..", "..", "..");
const runsRoot = path.join(repoRoot, "frontend", "test", "fixtures", "mini_run");
const selectionsFile = path.join(runsRoot, "demo", "selections.json");

function pythonAvailable(): boolean {
    return spawnSync("python3", ["--version"]).status === 0;
}

async function startService(): Promise<{ base: string; stop: () => void }> {
    const child = spawn(
        "python3",
        ["-m", "faultline.pipeline.cli", "serve", "--runs-root", runsRoot, "--port", "0"],
        { cwd: repoRoot, stdio: ["ignore", "pipe", "pipe"] },
    );
    const base = await new Promise<string>((resolve, reject) => {
        const timer = setTimeout(() => reject(new Error("service did not start")), 15000);
        child.stdout.on("data", (chunk: Buffer) => {
            const match = /review service on (http:\/\/[^ ]+)/.exec(chunk.toString());
            if (match) {
                clearTimeout(timer);
                resolve(match[1]);
            }
        });
        child.on("exit", (code) => reject(new Error(`service exited early (${code})`)));
    });
    return { base, stop: () => child.kill() };
}

test("review loop against the live service", { skip: !pythonAvailable() }, async () => {
    rmSync(selectionsFile, { force: true });
    const { base, stop } = await startService();
    try {
        const api = new ReviewApi(base);
        const runs = await api.listRuns();
        assert.ok(runs.includes("demo"));

        const traces = await api.listTraces("demo");
        assert.ok(traces.includes("demo20"));
        const doc = await api.trace("demo", "demo20");
        const controller = new ReplayController(doc);
        assert.equal(controller.frameCount, 20); // 20-step trace renders 20 frames

        // The checked-in winner is candidate 0; the reviewer overrides to 1.
        const before = await api.candidates("demo");
        assert.equal(before.subtypes["left_sparse"][0].winner_id, 0);
        const ack = await api.submitSelection("demo", "left_sparse", 0, 1);
        assert.equal(ack.candidate_id, 1);

        assert.ok(existsSync(selectionsFile));
        const selections = JSON.parse(readFileSync(selectionsFile, "utf-8"));
        assert.equal(selections["left_sparse/iter0"], 1);

        // Stale/unknown candidate ids are rejected with the server's message.
        await assert.rejects(
            api.submitSelection("demo", "left_sparse", 0, 42),
            /not a valid candidate/,
        );
    } finally {
        stop();
        rmSync(selectionsFile, { force: true });
    }
});
