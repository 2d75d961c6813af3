import { defineConfig } from 'vitest/config'

export default defineConfig({
  test: {
    environment: 'node',
    globalSetup: ['./tests/globalSetup.ts'],
    // tests share one live server and one store: run files serially
    fileParallelism: false,
    testTimeout: 30_000,
    hookTimeout: 90_000,
  },
})
