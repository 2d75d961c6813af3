// Leave management: per-type start / taken / remaining / last-taken for a
// chosen employee, plus the apply-leave control. Balances on screen always
// come from the latest API response, never from client arithmetic.

import { ApiError, HrmsApi, LeaveKind, LeaveWire } from '../api.js'
import { Errors, banner, esc, errorFor, table } from '../html.js'

export interface LeaveState {
  empid: string
  account: LeaveWire | null
  lookupError: string
  applyErrors: Errors
  applyError: string
  notice: string
}

export const initialLeave: LeaveState = {
  empid: '',
  account: null,
  lookupError: '',
  applyErrors: [],
  applyError: '',
  notice: '',
}

function kindRow(name: string, kind: LeaveKind): string[] {
  return [
    name,
    String(kind.start),
    String(kind.taken),
    String(kind.remaining),
    kind.last_taken ?? '—',
  ]
}

export function renderLeave(state: LeaveState): string {
  const account = state.account
  let body = ''
  if (account) {
    const rows = [
      kindRow('Vacation', account.vacation),
      kindRow('Sick', account.sick),
      kindRow('Holiday', account.holiday),
    ]
    const frozen = account.frozen
    body = `
      <h2>${esc(account.emp_name)} (${esc(account.empid)})${frozen ? ' — resigned, account frozen' : ''}</h2>
      ${table(['Type', 'Allocated', 'Taken', 'Remaining', 'Last taken'], rows)}
      ${banner('success', state.notice)}
      ${banner('error', state.applyError)}
      <form id="leave-apply-form" ${frozen ? 'data-frozen="1"' : ''}>
        <label>Type
          <select name="type" ${frozen ? 'disabled' : ''}>
            <option>Vacation</option><option>Sick</option><option>Holiday</option>
          </select></label>
        <label>Days <input name="days" type="number" min="1" value="1" ${frozen ? 'disabled' : ''}>
          ${errorFor(state.applyErrors, 'days')}</label>
        <label>Date <input name="date" type="date" ${frozen ? 'disabled' : ''}>
          ${errorFor(state.applyErrors, 'date')}</label>
        <button type="submit" ${frozen ? 'disabled' : ''}>Apply leave</button>
      </form>`
  }
  return `
  <section class="card">
    <h1>Leave Management</h1>
    <form id="leave-lookup-form">
      <label>Employee id <input name="empid" value="${esc(state.empid)}"></label>
      <button type="submit">Look up</button>
    </form>
    ${banner('error', state.lookupError)}
    ${body}
  </section>`
}

export async function lookupLeave(
  api: HrmsApi,
  state: LeaveState,
  empid: string,
): Promise<LeaveState> {
  try {
    const account = await api.getLeave(empid)
    return { ...state, empid, account, lookupError: '', applyError: '', notice: '' }
  } catch (error) {
    const message =
      error instanceof ApiError && error.status === 404
        ? `No leave account for ${empid}`
        : error instanceof Error ? error.message : String(error)
    return { ...state, empid, account: null, lookupError: message }
  }
}

/** Apply leave and re-render balances from the server's response; an
 * insufficient balance keeps the old figures and shows the conflict with
 * the current remaining figure. */
export async function submitLeave(
  api: HrmsApi,
  state: LeaveState,
  values: { type: string; days: string; date: string },
): Promise<LeaveState> {
  if (!state.account) return state
  const days = Number(values.days)
  try {
    const account = await api.applyLeave(state.account.empid, values.type, days, values.date)
    return {
      ...state,
      account,
      applyErrors: [],
      applyError: '',
      notice: `Applied ${days} ${values.type} day(s)`,
    }
  } catch (error) {
    if (error instanceof ApiError) {
      const kind = values.type.toLowerCase() as 'vacation' | 'sick' | 'holiday'
      const remaining = state.account[kind]?.remaining
      const suffix = error.status === 409 ? ` (${remaining} day(s) remaining)` : ''
      return {
        ...state,
        applyErrors: error.fieldErrors,
        applyError: error.message + suffix,
        notice: '',
      }
    }
    throw error
  }
}
