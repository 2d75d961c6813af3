// Small HTML-string helpers shared by the screen renderers.

import type { FieldError } from './api.js'

export function esc(value: unknown): string {
  return String(value ?? '')
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;')
}

export type Errors = FieldError[]

export function errorFor(errors: Errors, field: string): string {
  const hit = errors.find((e) => e.field === field)
  if (!hit) return ''
  return `<span class="field-error" data-field="${esc(field)}">${esc(hit.message)}</span>`
}

export interface InputSpec {
  name: string
  label: string
  value?: string
  type?: string
  required?: boolean
  placeholder?: string
}

/** One labeled input row with its inline error slot. */
export function inputRow(spec: InputSpec, errors: Errors): string {
  const { name, label, value = '', type = 'text', required = false, placeholder = '' } = spec
  return `
    <label class="row" data-input="${esc(name)}">
      <span class="row-label">${esc(label)}${required ? ' *' : ''}</span>
      <input name="${esc(name)}" type="${esc(type)}" value="${esc(value)}"
             placeholder="${esc(placeholder)}">
      ${errorFor(errors, name)}
    </label>`
}

export function selectRow(
  name: string,
  label: string,
  options: string[],
  value: string,
  errors: Errors,
): string {
  const opts = options
    .map((o) => `<option value="${esc(o)}"${o === value ? ' selected' : ''}>${esc(o)}</option>`)
    .join('')
  return `
    <label class="row" data-input="${esc(name)}">
      <span class="row-label">${esc(label)}</span>
      <select name="${esc(name)}">${opts}</select>
      ${errorFor(errors, name)}
    </label>`
}

export function banner(kind: 'error' | 'success' | 'info', text: string): string {
  return text ? `<div class="banner banner-${kind}">${esc(text)}</div>` : ''
}

export function table(headers: string[], rows: string[][], rowAttrs: string[] = []): string {
  const head = headers.map((h) => `<th>${esc(h)}</th>`).join('')
  const body = rows
    .map((cells, i) => {
      const attrs = rowAttrs[i] ?? ''
      return `<tr ${attrs}>${cells.map((c) => `<td>${esc(c)}</td>`).join('')}</tr>`
    })
    .join('')
  return `<table class="data"><thead><tr>${head}</tr></thead><tbody>${body}</tbody></table>`
}
