import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    include: ["tests/**/*.test.ts"],
    environment: "node",
    // the integration suite boots the real HTTP service
    testTimeout: 30_000,
    hookTimeout: 30_000,
  },
});
