// Browser bootstrap: hash routing, session gating, event wiring.
//
// All rendering goes through the pure view modules; this file only moves
// strings into the DOM and form values out of it. The session token lives
// in the HrmsApi instance (memory only) — a hard refresh requires login.

import { HrmsApi } from './api.js'
import { resolveRoute } from './router.js'
import { initialLogin, renderLogin, submitLogin } from './views/login.js'
import { MODULE_LINKS, renderModuleNote, renderWelcome } from './views/welcome.js'
import {
  cancelEdit,
  initialEmployees,
  loadEmployees,
  renderEmployees,
  startEdit,
  submitEmployee,
} from './views/employees.js'
import { initialLeave, lookupLeave, renderLeave, submitLeave } from './views/leave.js'
import { initialPerformance, renderPerformance, submitEvaluation } from './views/performance.js'
import {
  initialExEmployees,
  renderExEmployees,
  searchExEmployees,
} from './views/exemployees.js'
import { initialRegister, renderRegister, submitRegistration } from './views/register.js'

const api = new HrmsApi('')
let userid = ''

const state = {
  login: { ...initialLogin },
  employees: { ...initialEmployees },
  leave: { ...initialLeave },
  performance: { ...initialPerformance },
  exEmployees: { ...initialExEmployees },
  register: { ...initialRegister },
}

function app(): HTMLElement {
  return document.getElementById('app')!
}

function formValues(form: HTMLFormElement): Record<string, string> {
  const values: Record<string, string> = {}
  for (const [key, value] of new FormData(form).entries()) {
    values[key] = String(value)
  }
  return values
}

async function render(): Promise<void> {
  const route = resolveRoute(location.hash, api.authenticated)
  if (route !== location.hash) {
    location.hash = route
    return
  }
  switch (route) {
    case '#/login':
      app().innerHTML = renderLogin(state.login)
      break
    case '#/welcome':
      app().innerHTML = renderWelcome(userid)
      break
    case '#/employees':
      state.employees = await loadEmployees(api, state.employees)
      app().innerHTML = renderEmployees(state.employees)
      break
    case '#/leave':
      app().innerHTML = renderLeave(state.leave)
      break
    case '#/performance':
      app().innerHTML = renderPerformance(state.performance)
      break
    case '#/ex-employees':
      app().innerHTML = renderExEmployees(state.exEmployees)
      break
    case '#/register':
      app().innerHTML = renderRegister(state.register)
      break
    case '#/payroll':
      app().innerHTML = renderModuleNote(
        'Payroll',
        'Pay statements are run through the API (POST /api/payroll/run) or the ' +
          'hrms CLI; the PayrollRegister report lists gross and net per period.',
      )
      break
    case '#/training':
      app().innerHTML = renderModuleNote(
        'Training',
        'Training schedules are managed through the API (POST /api/training) or ' +
          'the hrms CLI; the TrainingStatus report lists who is in training.',
      )
      break
    default:
      location.hash = api.authenticated ? '#/welcome' : '#/login'
      return
  }
}

async function handleSubmit(event: SubmitEvent): Promise<void> {
  const form = event.target as HTMLFormElement
  event.preventDefault()
  const values = formValues(form)
  switch (form.id) {
    case 'login-form': {
      const outcome = await submitLogin(api, values as { userid: string; password: string })
      state.login = outcome.state
      if (outcome.ok) {
        userid = values.userid
        location.hash = '#/welcome'
      }
      break
    }
    case 'employee-form':
      state.employees = await submitEmployee(api, state.employees, values)
      break
    case 'employee-filter':
      state.employees = await loadEmployees(api, state.employees, {
        department: values.department ?? '',
        status: values.status ?? '',
      })
      break
    case 'leave-lookup-form':
      state.leave = await lookupLeave(api, state.leave, values.empid ?? '')
      break
    case 'leave-apply-form':
      state.leave = await submitLeave(
        api, state.leave, values as { type: string; days: string; date: string },
      )
      break
    case 'performance-form':
      state.performance = await submitEvaluation(api, state.performance, values)
      break
    case 'ex-search-form':
      state.exEmployees = await searchExEmployees(
        api, state.exEmployees, values as { empid: string; department: string },
      )
      break
    case 'register-form':
      state.register = await submitRegistration(api, state.register, values)
      break
    default:
      return
  }
  await render()
}

async function handleClick(event: MouseEvent): Promise<void> {
  const target = (event.target as HTMLElement).closest<HTMLElement>('[data-action]')
  if (!target) return
  switch (target.dataset.action) {
    case 'logout':
      api.logout()
      userid = ''
      location.hash = '#/login'
      break
    case 'edit-employee':
      state.employees = await startEdit(api, state.employees, target.dataset.empid!)
      await render()
      break
    case 'cancel-edit':
      state.employees = cancelEdit(state.employees)
      await render()
      break
    case 'register-again':
      state.register = { ...initialRegister }
      break
  }
}

export function boot(): void {
  window.addEventListener('hashchange', () => void render())
  app().addEventListener('submit', (e) => void handleSubmit(e as SubmitEvent))
  app().addEventListener('click', (e) => void handleClick(e))
  void render()
}

// MODULE_LINKS is re-exported so nav chrome and tests share one source.
export { MODULE_LINKS }

if (typeof document !== 'undefined' && document.getElementById('app')) {
  boot()
}
