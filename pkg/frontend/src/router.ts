// Pure routing rules: which screens exist and who may see them.

/** Screens reachable without a session. */
export const PUBLIC_SCREENS: ReadonlySet<string> = new Set(['#/login', '#/register'])

export const ALL_SCREENS: ReadonlySet<string> = new Set([
  '#/login', '#/welcome', '#/employees', '#/leave', '#/performance',
  '#/ex-employees', '#/register', '#/payroll', '#/training',
])

/** Where a navigation attempt actually lands: unknown routes bounce to
 * welcome (or login), and module screens without a session go to login. */
export function resolveRoute(hash: string, authenticated: boolean): string {
  const route = hash || '#/login'
  if (!ALL_SCREENS.has(route)) return authenticated ? '#/welcome' : '#/login'
  if (!PUBLIC_SCREENS.has(route) && !authenticated) return '#/login'
  return route
}
