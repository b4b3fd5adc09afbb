import assert from "node:assert/strict";
import { readFileSync } from "node:fs";
import path from "node:path";
import { test } from "node:test";
import { fileURLToPath } from "node:url";

import { ReplayController } from "../src/replay.js";
import type { ReplayDocument } from "../src/types.js";

const here = path.dirname(fileURLToPath(import.meta.url));

function loadTrace20(): ReplayDocument {
    const raw = readFileSync(path.join(here, "..", "..", "test", "fixtures", "trace20.json"), "utf-8");
    return JSON.parse(raw) as ReplayDocument;
}

test("a 20-step trace gives 20 frames and 20 scrub positions", () => {
    const controller = new ReplayController(loadTrace20());
    assert.equal(controller.frameCount, 20);
    const positions = new Set<number>();
    for (let i = 0; i < controller.frameCount; i += 1) {
        controller.scrubTo(i);
        positions.add(controller.currentFrame);
    }
    assert.equal(positions.size, 20);
});

test("scrubbing clamps to the frame range", () => {
    const controller = new ReplayController(loadTrace20());
    controller.scrubTo(-5);
    assert.equal(controller.currentFrame, 0);
    controller.scrubTo(10_000);
    assert.equal(controller.currentFrame, 19);
});

test("playback advances at the document rate and stops on the last frame", () => {
    const doc = loadTrace20();
    assert.equal(doc.playback_rate, 5); // 5 frames per second
    const controller = new ReplayController(doc);
    controller.play();
    controller.tick(1000); // one second: five frames
    assert.equal(controller.currentFrame, 5);
    controller.tick(60_000); // way past the end: hold on final frame, paused
    assert.equal(controller.currentFrame, 19);
    assert.equal(controller.isPlaying, false);
});

test("an empty trace reports the no-frames state", () => {
    const doc = loadTrace20();
    const empty: ReplayDocument = { ...doc, frames: [], collision_frame: null };
    const controller = new ReplayController(empty);
    assert.equal(controller.empty, true);
    assert.equal(controller.frameCount, 0);
    assert.deepEqual(controller.poses(), []);
    controller.play();
    assert.equal(controller.isPlaying, false);
});

test("collision frame is flagged while scrubbed onto it", () => {
    const doc = loadTrace20();
    const marked: ReplayDocument = { ...doc, collision_frame: 7 };
    const controller = new ReplayController(marked);
    controller.scrubTo(7);
    assert.equal(controller.atCollision, true);
    controller.scrubTo(8);
    assert.equal(controller.atCollision, false);
});

test("tested vehicle is present and distinct in every frame", () => {
    const doc = loadTrace20();
    for (const frame of doc.frames) {
        const tested = frame.filter((v) => v.role === "tested");
        assert.equal(tested.length, 1);
    }
});
