// Top-down 2D canvas rendering of road geometry and vehicle rectangles.

import type { ReplayDocument, RoadGeometry, VehiclePose } from "./types.js";

const ROLE_COLORS: Record<VehiclePose["role"], string> = {
    tested: "#2f7de1",
    adversarial: "#d9483b",
    background: "#8a8f98",
};

interface Viewport {
    scale: number;
    offsetX: number;
    offsetY: number;
}

function fitViewport(doc: ReplayDocument, width: number, height: number): Viewport {
    let minX = Infinity, maxX = -Infinity, minY = Infinity, maxY = -Infinity;
    for (const frame of doc.frames) {
        for (const v of frame) {
            minX = Math.min(minX, v.x);
            maxX = Math.max(maxX, v.x);
            minY = Math.min(minY, v.y);
            maxY = Math.max(maxY, v.y);
        }
    }
    if (doc.geometry.kind === "roundabout") {
        const r = doc.geometry.ring_radius + doc.geometry.ramp_length + 5;
        minX = Math.min(minX, -r); maxX = Math.max(maxX, r);
        minY = Math.min(minY, -r); maxY = Math.max(maxY, r);
    } else {
        minY = Math.min(minY, -doc.geometry.lane_width);
        maxY = Math.max(maxY, doc.geometry.lane_count * doc.geometry.lane_width);
    }
    const pad = 8;
    const spanX = Math.max(maxX - minX + 2 * pad, 1);
    const spanY = Math.max(maxY - minY + 2 * pad, 1);
    const scale = Math.min(width / spanX, height / spanY);
    return {
        scale,
        offsetX: (width - (minX + maxX) * scale) / 2,
        offsetY: (height - (minY + maxY) * scale) / 2,
    };
}

function drawRoad(ctx: CanvasRenderingContext2D, geom: RoadGeometry, vp: Viewport, width: number): void {
    ctx.strokeStyle = "#d4d7dd";
    ctx.lineWidth = 1;
    if (geom.kind === "highway") {
        for (let lane = 0; lane <= geom.lane_count; lane += 1) {
            const y = (lane - 0.5) * geom.lane_width * vp.scale + vp.offsetY;
            ctx.beginPath();
            ctx.setLineDash(lane === 0 || lane === geom.lane_count ? [] : [6, 6]);
            ctx.moveTo(0, y);
            ctx.lineTo(width, y);
            ctx.stroke();
        }
        ctx.setLineDash([]);
        return;
    }
    // Ring lanes are concentric circles; ramps are radial stubs.
    const cx = vp.offsetX;
    const cy = vp.offsetY;
    for (let lane = 0; lane <= geom.lane_count; lane += 1) {
        const radius = (geom.ring_radius + (0.5 - lane) * geom.lane_width) * vp.scale;
        ctx.beginPath();
        ctx.setLineDash(lane === 0 || lane === geom.lane_count ? [] : [6, 6]);
        ctx.arc(cx, cy, Math.max(radius, 1), 0, Math.PI * 2);
        ctx.stroke();
    }
    ctx.setLineDash([]);
    for (let ramp = 0; ramp < geom.ramp_count; ramp += 1) {
        const phi = (2 * Math.PI * ramp) / geom.ramp_count;
        const inner = geom.ring_radius * vp.scale;
        const outer = (geom.ring_radius + geom.ramp_length) * vp.scale;
        ctx.beginPath();
        ctx.moveTo(cx + inner * Math.cos(phi), cy + inner * Math.sin(phi));
        ctx.lineTo(cx + outer * Math.cos(phi), cy + outer * Math.sin(phi));
        ctx.stroke();
    }
}

export function renderFrame(
    canvas: HTMLCanvasElement,
    doc: ReplayDocument,
    frameIndex: number,
    highlightCollision: boolean,
): void {
    const ctx = canvas.getContext("2d");
    if (!ctx) return;
    const { width, height } = canvas;
    ctx.clearRect(0, 0, width, height);
    ctx.fillStyle = "#f7f8fa";
    ctx.fillRect(0, 0, width, height);
    if (doc.frames.length === 0) {
        ctx.fillStyle = "#666";
        ctx.font = "14px sans-serif";
        ctx.fillText("no frames", width / 2 - 30, height / 2);
        return;
    }
    const vp = fitViewport(doc, width, height);
    drawRoad(ctx, doc.geometry, vp, width);
    const frame = doc.frames[Math.min(frameIndex, doc.frames.length - 1)];
    for (const v of frame) {
        ctx.save();
        ctx.translate(v.x * vp.scale + vp.offsetX, v.y * vp.scale + vp.offsetY);
        ctx.rotate(v.heading);
        ctx.fillStyle = ROLE_COLORS[v.role] ?? "#444";
        const l = v.length * vp.scale;
        const w = v.width * vp.scale;
        ctx.fillRect(-l / 2, -w / 2, l, w);
        if (v.role === "tested") {
            ctx.strokeStyle = "#103a75";
            ctx.lineWidth = 2;
            ctx.strokeRect(-l / 2, -w / 2, l, w);
        }
        ctx.restore();
    }
    if (highlightCollision) {
        ctx.strokeStyle = "#d9483b";
        ctx.lineWidth = 4;
        ctx.strokeRect(2, 2, width - 4, height - 4);
    }
}
