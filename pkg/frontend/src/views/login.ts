// Login screen: the gate in front of every admin module.

import { ApiError, HrmsApi } from '../api.js'
import { banner, esc } from '../html.js'

export interface LoginState {
  userid: string
  error: string
}

export const initialLogin: LoginState = { userid: '', error: '' }

export function renderLogin(state: LoginState): string {
  return `
  <section class="card narrow">
    <h1>HR Management System</h1>
    <p class="muted">Administrator login</p>
    ${banner('error', state.error)}
    <form id="login-form">
      <label class="row"><span class="row-label">User id</span>
        <input name="userid" value="${esc(state.userid)}" autocomplete="username"></label>
      <label class="row"><span class="row-label">Password</span>
        <input name="password" type="password" autocomplete="current-password"></label>
      <button type="submit">Sign in</button>
    </form>
    <p class="muted">Applicants: <a href="#/register">register a resume</a> (no login needed).</p>
  </section>`
}

/** Attempt a login; on failure the state carries a single non-specific
 * error (the server never says which part was wrong). */
export async function submitLogin(
  api: HrmsApi,
  values: { userid: string; password: string },
): Promise<{ state: LoginState; ok: boolean }> {
  try {
    await api.login(values.userid, values.password)
    return { state: { userid: values.userid, error: '' }, ok: true }
  } catch (error) {
    const message =
      error instanceof ApiError && error.status === 401
        ? 'Invalid credentials'
        : 'Login failed: ' + (error instanceof Error ? error.message : String(error))
    return { state: { userid: values.userid, error: message }, ok: false }
  }
}
