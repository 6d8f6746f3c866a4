/// <reference types="vitest" />
import { defineConfig } from 'vite';

// Dev server proxies /api to the Python service so the app runs same-origin.
export default defineConfig({
  server: {
    proxy: {
      '/api': 'http://127.0.0.1:8765',
    },
  },
  test: {
    environment: 'jsdom',
    include: ['tests/**/*.test.ts'],
    exclude: ['tests/smoke.test.ts', '**/node_modules/**'],
  },
});
