// Employee details: the create/edit form (inputs grouped under Personal,
// Contact and Status headings) and the registered-employee list with
// filters and row click-through to edit.

import { ApiError, EmployeeAttrs, HrmsApi } from '../api.js'
import { Errors, banner, esc, inputRow, selectRow, table } from '../html.js'

export interface EmployeesState {
  form: Record<string, string>
  errors: Errors
  formError: string
  notice: string
  editing: string | null
  list: EmployeeAttrs[]
  filters: { department: string; status: string }
}

export const EMPTY_FORM: Record<string, string> = {
  Title: '', Empid: '', Firname: '', Midname: '', Lastname: '', Blood: '',
  Nation: '', Address: '', City: '', State: '', Pin: '', Home: '',
  Workplace: '', Mobile: '', Email: '', Status: 'Active', Supervisor: '',
  Hdate: '', Dept: '', Bdate: '', gender: 'M', marital: 'S',
}

export const initialEmployees: EmployeesState = {
  form: { ...EMPTY_FORM },
  errors: [],
  formError: '',
  notice: '',
  editing: null,
  list: [],
  filters: { department: '', status: '' },
}

const PERSONAL: Array<[string, string]> = [
  ['Title', 'Title'], ['Empid', 'Employee id'], ['Firname', 'First name'],
  ['Midname', 'Middle name'], ['Lastname', 'Last name'], ['Blood', 'Blood group'],
  ['Nation', 'Nationality'], ['Bdate', 'Birth date'],
]
const CONTACT: Array<[string, string]> = [
  ['Address', 'Address'], ['City', 'City'], ['State', 'State'], ['Pin', 'Pin code'],
  ['Home', 'Home phone'], ['Workplace', 'Work phone'], ['Mobile', 'Mobile'],
  ['Email', 'Email'],
]
const STATUS: Array<[string, string]> = [
  ['Supervisor', 'Supervisor'], ['Hdate', 'Hire date'], ['Dept', 'Department'],
]
const OPTIONAL = new Set(['Midname', 'Mobile'])

function group(
  legend: string,
  fields: Array<[string, string]>,
  state: EmployeesState,
): string {
  const rows = fields
    .map(([name, label]) =>
      inputRow(
        {
          name,
          label,
          value: state.form[name] ?? '',
          required: !OPTIONAL.has(name),
          type: name === 'Hdate' || name === 'Bdate' ? 'date' : 'text',
        },
        state.errors,
      ),
    )
    .join('')
  return `<fieldset><legend>${esc(legend)}</legend>${rows}</fieldset>`
}

export function renderEmployees(state: EmployeesState): string {
  const editing = state.editing !== null
  const rows = state.list.map((e) => [
    String(e.Empid ?? ''), String(e.Firname ?? ''), String(e.Lastname ?? ''),
    String(e.Dept ?? ''), String(e.Status ?? ''), String(e.Email ?? ''),
  ])
  const rowAttrs = state.list.map(
    (e) => `class="employee-row" data-action="edit-employee" data-empid="${esc(e.Empid)}"`,
  )
  return `
  <section class="card">
    <h1>Employee Details</h1>
    ${banner('success', state.notice)}
    ${banner('error', state.formError)}
    <form id="employee-form" data-editing="${editing ? esc(state.editing!) : ''}">
      ${group('Personal Information', PERSONAL, state)}
      <fieldset><legend>Personal Information (continued)</legend>
        ${selectRow('gender', 'Gender', ['M', 'F'], state.form.gender ?? 'M', state.errors)}
        ${selectRow('marital', 'Marital status', ['S', 'M'], state.form.marital ?? 'S', state.errors)}
      </fieldset>
      ${group('Contact Information', CONTACT, state)}
      <fieldset><legend>Employee Status</legend>
        ${selectRow('Status', 'Status', ['Active', 'InTraining', 'Resigned'], state.form.Status ?? 'Active', state.errors)}
        ${STATUS.map(([name, label]) =>
          inputRow(
            { name, label, value: state.form[name] ?? '', required: true,
              type: name === 'Hdate' ? 'date' : 'text' },
            state.errors,
          ),
        ).join('')}
      </fieldset>
      <button type="submit">${editing ? 'Save changes' : 'Create employee'}</button>
      ${editing ? '<button type="button" data-action="cancel-edit">Cancel</button>' : ''}
    </form>
    <h2>Registered employees</h2>
    <form id="employee-filter">
      <input name="department" placeholder="department" value="${esc(state.filters.department)}">
      <select name="status">
        <option value="">any status</option>
        ${['Active', 'InTraining', 'Resigned']
          .map((s) => `<option value="${s}"${state.filters.status === s ? ' selected' : ''}>${s}</option>`)
          .join('')}
      </select>
      <button type="submit">Filter</button>
    </form>
    ${table(['Empid', 'First name', 'Last name', 'Department', 'Status', 'Email'], rows, rowAttrs)}
  </section>`
}

export async function loadEmployees(
  api: HrmsApi,
  state: EmployeesState,
  filters?: { department: string; status: string },
): Promise<EmployeesState> {
  const effective = filters ?? state.filters
  const result = await api.listEmployees({
    department: effective.department || undefined,
    status: effective.status || undefined,
  })
  return { ...state, list: result.employees, filters: effective }
}

/** Create or (when editing) replace an employee. A 422 keeps the form
 * contents and attaches one inline error per rejected field; a 409 shows
 * a form-level duplicate message. */
export async function submitEmployee(
  api: HrmsApi,
  state: EmployeesState,
  values: Record<string, string>,
): Promise<EmployeesState> {
  const next: EmployeesState = { ...state, form: values, errors: [], formError: '', notice: '' }
  try {
    if (state.editing !== null) {
      await api.updateEmployee(state.editing, values)
    } else {
      await api.createEmployee(values)
    }
    const reloaded = await loadEmployees(api, next)
    return {
      ...reloaded,
      form: { ...EMPTY_FORM },
      editing: null,
      notice: state.editing !== null
        ? `Saved ${values.Empid || state.editing}`
        : `Created ${values.Empid}`,
    }
  } catch (error) {
    if (error instanceof ApiError && error.fieldErrors.length > 0) {
      return { ...next, errors: error.fieldErrors }
    }
    if (error instanceof ApiError) {
      return { ...next, formError: error.message }
    }
    throw error
  }
}

export async function startEdit(
  api: HrmsApi,
  state: EmployeesState,
  empid: string,
): Promise<EmployeesState> {
  const record = await api.getEmployee(empid)
  const form: Record<string, string> = {}
  for (const key of Object.keys(EMPTY_FORM)) form[key] = String(record[key] ?? '')
  return { ...state, form, editing: empid, errors: [], formError: '', notice: '' }
}

export function cancelEdit(state: EmployeesState): EmployeesState {
  return { ...state, form: { ...EMPTY_FORM }, editing: null, errors: [], formError: '' }
}
