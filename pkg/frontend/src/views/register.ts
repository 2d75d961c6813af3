// Public applicant registration: the one screen that works without a
// session. On success it shows the assigned applicant id.

import { ApiError, ApplicantWire, HrmsApi } from '../api.js'
import { Errors, banner, esc, inputRow } from '../html.js'

export interface RegisterState {
  form: Record<string, string>
  errors: Errors
  formError: string
  confirmed: ApplicantWire | null
}

export const EMPTY_REGISTRATION: Record<string, string> = {
  name: '', contact_email: '', contact_phone: '', work_experience_years: '',
  specialization: '', interest: '', resume_text: '',
}

export const initialRegister: RegisterState = {
  form: { ...EMPTY_REGISTRATION },
  errors: [],
  formError: '',
  confirmed: null,
}

const FIELDS: Array<[string, string]> = [
  ['name', 'Full name'],
  ['contact_email', 'Email'],
  ['contact_phone', 'Phone (digits only)'],
  ['work_experience_years', 'Years of work experience'],
  ['specialization', 'Area of specialization'],
  ['interest', 'Area of interest'],
]

export function renderRegister(state: RegisterState): string {
  if (state.confirmed) {
    return `
    <section class="card narrow">
      <h1>Registration received</h1>
      <div class="banner banner-success">
        Thank you, ${esc(state.confirmed.name)}. Your applicant id is
        <strong data-applicant-id>${esc(state.confirmed.applicant_id)}</strong>.
      </div>
      <p class="muted">Status: ${esc(state.confirmed.status)}. Keep the id for any enquiry.</p>
      <p><a href="#/register" data-action="register-again">Register another resume</a></p>
    </section>`
  }
  return `
  <section class="card narrow">
    <h1>Applicant Registration</h1>
    <p class="muted">Register your resume online — no account needed.</p>
    ${banner('error', state.formError)}
    <form id="register-form">
      ${FIELDS.map(([name, label]) =>
        inputRow({ name, label, value: state.form[name] ?? '', required: true }, state.errors),
      ).join('')}
      <label class="row" data-input="resume_text">
        <span class="row-label">Resume *</span>
        <textarea name="resume_text" rows="6">${esc(state.form.resume_text ?? '')}</textarea>
        ${state.errors.find((e) => e.field === 'resume_text')
          ? `<span class="field-error" data-field="resume_text">${esc(
              state.errors.find((e) => e.field === 'resume_text')!.message,
            )}</span>`
          : ''}
      </label>
      <button type="submit">Submit registration</button>
    </form>
  </section>`
}

export async function submitRegistration(
  api: HrmsApi,
  state: RegisterState,
  values: Record<string, string>,
): Promise<RegisterState> {
  const next: RegisterState = { ...state, form: values, errors: [], formError: '', confirmed: null }
  try {
    const confirmed = await api.registerApplicant({
      name: values.name,
      contact_email: values.contact_email,
      contact_phone: values.contact_phone,
      work_experience_years: values.work_experience_years,
      specialization: values.specialization,
      interest: values.interest,
      resume_text: values.resume_text,
    })
    return { ...next, form: { ...EMPTY_REGISTRATION }, confirmed }
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
