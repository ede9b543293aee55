/// <reference types="vitest/config" />
import { defineConfig } from "vite";

export default defineConfig({
  build: {
    outDir: "dist",
  },
  server: {
    // Dev-mode proxy so `vite` and `mementoscope serve` can run side by side.
    proxy: {
      "/api": "http://127.0.0.1:8670",
    },
  },
  test: {
    environment: "happy-dom",
    include: ["tests/**/*.test.ts"],
  },
});
