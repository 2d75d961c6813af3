// Welcome screen: navigation to the six HR modules.

import { esc } from '../html.js'

export interface ModuleLink {
  name: string
  href: string
  note: string
}

export const MODULE_LINKS: ModuleLink[] = [
  { name: 'Employee Details', href: '#/employees', note: 'add, modify, delete and list employees' },
  { name: 'Payroll', href: '#/payroll', note: 'pay statements (run via API or CLI, reported here)' },
  { name: 'Training', href: '#/training', note: 'training schedule (managed via API or CLI)' },
  { name: 'Performance', href: '#/performance', note: 'evaluations; leave management lives here too' },
  { name: 'Resignation', href: '#/ex-employees', note: 'ex-employee lookup for emergencies' },
  { name: 'Resume Tracking', href: '#/register', note: 'public online applicant registration' },
]

export function renderWelcome(userid: string): string {
  const links = MODULE_LINKS.map(
    (m) => `
    <li>
      <a class="module-link" href="${esc(m.href)}">${esc(m.name)}</a>
      <span class="muted">${esc(m.note)}</span>
    </li>`,
  ).join('')
  return `
  <section class="card">
    <h1>Welcome, ${esc(userid)}</h1>
    <p class="muted">Choose a module:</p>
    <ul class="modules">${links}</ul>
    <p><a href="#/leave">Leave management</a> · <button type="button" data-action="logout">Sign out</button></p>
  </section>`
}

export function renderModuleNote(title: string, body: string): string {
  return `
  <section class="card narrow">
    <h1>${esc(title)}</h1>
    <p>${esc(body)}</p>
    <p><a href="#/welcome">Back to modules</a></p>
  </section>`
}
