// Ex-employee lookup: read-only search over the resignation archive by
// employee id or department, for the emergency-contact use case.

import { ApiError, HrmsApi, ResignationWire } from '../api.js'
import { banner, esc, table } from '../html.js'

export interface ExEmployeesState {
  empid: string
  department: string
  results: ResignationWire[]
  error: string
  searched: boolean
}

export const initialExEmployees: ExEmployeesState = {
  empid: '',
  department: '',
  results: [],
  error: '',
  searched: false,
}

export function renderExEmployees(state: ExEmployeesState): string {
  const rows = state.results.map((r) => [
    r.empid, r.emp_name, r.position, r.department, r.supervisor,
    r.joining_date, r.resignation_date, r.email, r.city, r.home_phone,
  ])
  const empty = state.searched && state.results.length === 0 && !state.error
  return `
  <section class="card">
    <h1>Ex-Employee Details</h1>
    <form id="ex-search-form">
      <label>Employee id <input name="empid" value="${esc(state.empid)}"></label>
      <span class="muted">or</span>
      <label>Department <input name="department" value="${esc(state.department)}"></label>
      <button type="submit">Search</button>
    </form>
    ${banner('error', state.error)}
    ${empty ? banner('info', 'No matching ex-employees') : ''}
    ${state.results.length > 0
      ? table(
          ['Empid', 'Name', 'Position', 'Department', 'Supervisor',
           'Joined', 'Resigned', 'Email', 'City', 'Home phone'],
          rows,
        )
      : ''}
  </section>`
}

export async function searchExEmployees(
  api: HrmsApi,
  state: ExEmployeesState,
  values: { empid: string; department: string },
): Promise<ExEmployeesState> {
  const next = { ...state, ...values, searched: true, error: '' }
  try {
    if (values.empid.trim()) {
      const record = await api.getResignation(values.empid.trim())
      return { ...next, results: [record] }
    }
    const listed = await api.listResignations(values.department.trim() || undefined)
    return { ...next, results: listed.resignations }
  } catch (error) {
    if (error instanceof ApiError && error.status === 404) {
      return { ...next, results: [], error: `No such ex-employee: ${values.empid}` }
    }
    throw error
  }
}
