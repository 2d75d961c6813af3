// Performance entry: the evaluation form plus the evaluated employee's
// history, newest first.

import { ApiError, EvaluationWire, HrmsApi } from '../api.js'
import { Errors, banner, esc, inputRow, table } from '../html.js'

export interface PerformanceState {
  form: Record<string, string>
  errors: Errors
  formError: string
  notice: string
  history: EvaluationWire[]
}

export const EMPTY_EVALUATION: Record<string, string> = {
  empid: '', emp_name: '', department: '', workgroup: '', division: '',
  position: '', evaluation_date: '', evaluator: '', review_from: '',
  review_to: '', responsibility: '',
}

export const initialPerformance: PerformanceState = {
  form: { ...EMPTY_EVALUATION },
  errors: [],
  formError: '',
  notice: '',
  history: [],
}

const FIELDS: Array<[string, string, string]> = [
  ['empid', 'Employee id', 'text'],
  ['emp_name', 'Employee name', 'text'],
  ['department', 'Department', 'text'],
  ['workgroup', 'Work group', 'text'],
  ['division', 'Division', 'text'],
  ['position', 'Position', 'text'],
  ['evaluation_date', 'Evaluation date', 'date'],
  ['evaluator', 'Evaluator', 'text'],
  ['review_from', 'Review period from', 'date'],
  ['review_to', 'Review period to', 'date'],
  ['responsibility', 'Responsibility', 'text'],
]

export function renderPerformance(state: PerformanceState): string {
  const rows = state.history.map((e) => [
    e.evaluation_date, e.evaluator, `${e.review_from} .. ${e.review_to}`,
    e.position, e.responsibility,
  ])
  return `
  <section class="card">
    <h1>Performance Details</h1>
    ${banner('success', state.notice)}
    ${banner('error', state.formError)}
    <form id="performance-form">
      ${FIELDS.map(([name, label, type]) =>
        inputRow({ name, label, type, value: state.form[name] ?? '', required: true }, state.errors),
      ).join('')}
      <button type="submit">Record evaluation</button>
    </form>
    ${state.history.length > 0
      ? `<h2>Evaluations for ${esc(state.history[0].empid)}</h2>` +
        table(['Date', 'Evaluator', 'Review period', 'Position', 'Responsibility'], rows)
      : ''}
    <p><a href="#/leave">Leave management</a></p>
  </section>`
}

export async function submitEvaluation(
  api: HrmsApi,
  state: PerformanceState,
  values: Record<string, string>,
): Promise<PerformanceState> {
  const next: PerformanceState = { ...state, form: values, errors: [], formError: '', notice: '' }
  try {
    const stored = await api.createEvaluation(values as unknown as EvaluationWire)
    const history = await api.listEvaluations(stored.empid)
    return {
      ...next,
      form: { ...EMPTY_EVALUATION },
      history: history.evaluations,
      notice: `Recorded evaluation of ${stored.empid} on ${stored.evaluation_date}`,
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
