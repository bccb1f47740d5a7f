import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    include: ["test/**/*.test.ts"],
    // the integration suite boots the real HTTP service, which takes a moment
    testTimeout: 30000,
    hookTimeout: 30000,
  },
});
