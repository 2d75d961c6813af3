// Performance entry form, including the review-period date rule.
import { describe, expect, it } from 'vitest'

import {
  initialPerformance,
  renderPerformance,
  submitEvaluation,
} from '../dist/assets/views/performance.js'
import { initialEmployees, submitEmployee } from '../dist/assets/views/employees.js'
import { adminApi, employeeAttrs, uniqueEmpid } from './helpers.js'

function evaluationValues(empid: string, overrides: Record<string, string> = {}) {
  return {
    empid,
    emp_name: 'Test Person',
    department: 'CS',
    workgroup: 'Core',
    division: 'South',
    position: 'Engineer',
    evaluation_date: '2024-06-01',
    evaluator: 'R Kumar',
    review_from: '2024-01-01',
    review_to: '2024-05-31',
    responsibility: 'Quarterly delivery',
    ...overrides,
  }
}

describe('performance screen', () => {
  it('records an evaluation and lists the history newest first', async () => {
    const api = await adminApi()
    const empid = uniqueEmpid()
    await submitEmployee(api, { ...initialEmployees }, {
      ...(employeeAttrs(empid) as Record<string, string>),
    })
    let state = await submitEvaluation(api, { ...initialPerformance }, evaluationValues(empid))
    expect(state.errors).toHaveLength(0)
    state = await submitEvaluation(api, state, evaluationValues(empid, {
      evaluation_date: '2023-06-01', review_from: '2023-01-01', review_to: '2023-05-31',
    }))
    expect(state.history.map((e) => e.evaluation_date)).toEqual(['2024-06-01', '2023-06-01'])
    const html = renderPerformance(state)
    expect(html).toContain(`Evaluations for ${empid}`)
  })

  it('review_to after evaluation_date yields an inline date error', async () => {
    const api = await adminApi()
    const empid = uniqueEmpid()
    await submitEmployee(api, { ...initialEmployees }, {
      ...(employeeAttrs(empid) as Record<string, string>),
    })
    const state = await submitEvaluation(
      api,
      { ...initialPerformance },
      evaluationValues(empid, { review_to: '2024-07-01' }),
    )
    expect(state.errors).toHaveLength(1)
    expect(state.errors[0].rule).toBe('DateOrderViolation')
    const html = renderPerformance(state)
    expect(html).toContain('class="field-error"')
    // the form keeps what was typed
    expect(state.form.review_to).toBe('2024-07-01')
  })
})
