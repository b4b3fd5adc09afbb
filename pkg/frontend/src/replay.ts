// Playback state machine, independent of the canvas so it is unit-testable.

import type { ReplayDocument, VehiclePose } from "./types.js";

export class ReplayController {
    private frame = 0;
    private playing = false;
    private accumulatorMs = 0;

    constructor(readonly doc: ReplayDocument) {}

    get frameCount(): number {
        return this.doc.frames.length;
    }

    get empty(): boolean {
        return this.frameCount === 0;
    }

    get currentFrame(): number {
        return this.frame;
    }

    get isPlaying(): boolean {
        return this.playing;
    }

    get atCollision(): boolean {
        return this.doc.collision_frame !== null && this.frame === this.doc.collision_frame;
    }

    poses(): VehiclePose[] {
        return this.empty ? [] : this.doc.frames[this.frame];
    }

    scrubTo(index: number): void {
        if (this.empty) return;
        this.frame = Math.min(Math.max(Math.trunc(index), 0), this.frameCount - 1);
    }

    play(): void {
        if (!this.empty) this.playing = true;
    }

    pause(): void {
        this.playing = false;
    }

    toggle(): void {
        this.playing ? this.pause() : this.play();
    }

    /** Advance playback by wall-clock milliseconds at the document's rate. */
    tick(elapsedMs: number): void {
        if (!this.playing || this.empty) return;
        this.accumulatorMs += elapsedMs;
        const frameMs = 1000 / this.doc.playback_rate;
        while (this.accumulatorMs >= frameMs) {
            this.accumulatorMs -= frameMs;
            if (this.frame + 1 >= this.frameCount) {
                this.playing = false; // hold on the final frame
                return;
            }
            this.frame += 1;
        }
    }
}
