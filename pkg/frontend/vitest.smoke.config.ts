import { defineConfig } from 'vitest/config';

// Smoke run against a live service; start one first, e.g.
//   PERSISTRY_DATASET=../data persistry serve --listen 127.0.0.1:8901
// then: npm run test:smoke (override the target with SMOKE_API_BASE).
export default defineConfig({
  test: {
    environment: 'jsdom',
    include: ['tests/smoke.test.ts'],
    testTimeout: 30000,
  },
});
