// Typed client for the hrms HTTP API. The console talks to the server
// exclusively through this module, and only via the endpoints declared in
// ENDPOINT_CATALOG — the contract test checks that list against the
// server's generated reference (docs/endpoints.json).

export interface FieldError {
  field: string
  rule: string
  message: string
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
    readonly fieldErrors: FieldError[] = [],
  ) {
    super(message)
    this.name = 'ApiError'
  }
}

export type EmployeeAttrs = Record<string, string | null>

export interface LeaveKind {
  start: number
  taken: number
  remaining: number
  last_taken: string | null
}

export interface LeaveWire {
  empid: string
  emp_name: string
  vacation: LeaveKind
  sick: LeaveKind
  holiday: LeaveKind
  frozen: boolean
}

export interface ResignationWire {
  empid: string
  title: string
  emp_name: string
  position: string
  department: string
  supervisor: string
  joining_date: string
  resignation_date: string
  email: string
  gender: string
  city: string
  home_phone: string
}

export interface EvaluationWire {
  empid: string
  emp_name: string
  department: string
  workgroup: string
  division: string
  position: string
  evaluation_date: string
  evaluator: string
  review_from: string
  review_to: string
  responsibility: string
}

export interface ApplicantWire {
  applicant_id: string
  name: string
  contact_email: string
  contact_phone: string
  work_experience_years: number
  specialization: string
  interest: string
  resume_text: string
  status: string
}

type Method = 'GET' | 'POST' | 'PUT' | 'DELETE'

// Every endpoint this client can emit, as (method, server path template).
export const ENDPOINT_CATALOG: ReadonlyArray<readonly [Method, string]> = [
  ['POST', '/api/login'],
  ['GET', '/api/employees'],
  ['POST', '/api/employees'],
  ['GET', '/api/employees/{empid}'],
  ['PUT', '/api/employees/{empid}'],
  ['DELETE', '/api/employees/{empid}'],
  ['GET', '/api/leave/{empid}'],
  ['POST', '/api/leave/{empid}/apply'],
  ['POST', '/api/performance'],
  ['GET', '/api/performance/{empid}'],
  ['GET', '/api/resignations'],
  ['GET', '/api/resignations/{empid}'],
  ['POST', '/api/applicants'],
]

const CATALOG_KEYS = new Set(ENDPOINT_CATALOG.map(([m, p]) => `${m} ${p}`))

export class HrmsApi {
  /** Session token, held in memory only; a page reload requires re-login. */
  token: string | null = null

  constructor(readonly baseUrl: string = '') {}

  get authenticated(): boolean {
    return this.token !== null
  }

  logout(): void {
    this.token = null
  }

  private async request<T>(
    method: Method,
    template: string,
    params: Record<string, string> = {},
    body?: unknown,
    query?: Record<string, string>,
  ): Promise<T> {
    if (!CATALOG_KEYS.has(`${method} ${template}`)) {
      throw new Error(`endpoint not in catalog: ${method} ${template}`)
    }
    let path = template
    for (const [key, value] of Object.entries(params)) {
      path = path.replace(`{${key}}`, encodeURIComponent(value))
    }
    let url = this.baseUrl + path
    if (query && Object.keys(query).length > 0) {
      url += '?' + new URLSearchParams(query).toString()
    }
    const headers: Record<string, string> = { Accept: 'application/json' }
    if (body !== undefined) headers['Content-Type'] = 'application/json'
    if (this.token) headers['Authorization'] = `Bearer ${this.token}`
    const response = await fetch(url, {
      method,
      headers,
      body: body === undefined ? undefined : JSON.stringify(body),
    })
    const text = await response.text()
    let data: any = null
    try {
      data = text ? JSON.parse(text) : null
    } catch {
      data = null
    }
    if (!response.ok) {
      const code = data?.code ?? 'error'
      const message = data?.message ?? response.statusText
      const fieldErrors: FieldError[] = data?.field_errors ?? []
      throw new ApiError(response.status, code, message, fieldErrors)
    }
    return data as T
  }

  async login(userid: string, password: string): Promise<void> {
    const result = await this.request<{ token: string }>(
      'POST', '/api/login', {}, { userid, password },
    )
    this.token = result.token
  }

  listEmployees(filters: { department?: string; status?: string } = {}) {
    const query: Record<string, string> = {}
    if (filters.department) query.department = filters.department
    if (filters.status) query.status = filters.status
    return this.request<{ employees: EmployeeAttrs[] }>(
      'GET', '/api/employees', {}, undefined, query,
    )
  }

  getEmployee(empid: string) {
    return this.request<EmployeeAttrs>('GET', '/api/employees/{empid}', { empid })
  }

  createEmployee(attrs: EmployeeAttrs) {
    return this.request<EmployeeAttrs>('POST', '/api/employees', {}, attrs)
  }

  updateEmployee(empid: string, attrs: EmployeeAttrs) {
    return this.request<EmployeeAttrs>('PUT', '/api/employees/{empid}', { empid }, attrs)
  }

  deleteEmployee(empid: string) {
    return this.request<{ deleted: string }>('DELETE', '/api/employees/{empid}', { empid })
  }

  getLeave(empid: string) {
    return this.request<LeaveWire>('GET', '/api/leave/{empid}', { empid })
  }

  applyLeave(empid: string, type: string, days: number, date: string) {
    return this.request<LeaveWire>(
      'POST', '/api/leave/{empid}/apply', { empid }, { type, days, date },
    )
  }

  createEvaluation(body: EvaluationWire) {
    return this.request<EvaluationWire>('POST', '/api/performance', {}, body)
  }

  listEvaluations(empid: string) {
    return this.request<{ evaluations: EvaluationWire[] }>(
      'GET', '/api/performance/{empid}', { empid },
    )
  }

  listResignations(department?: string) {
    const query: Record<string, string> = {}
    if (department) query.department = department
    return this.request<{ resignations: ResignationWire[] }>(
      'GET', '/api/resignations', {}, undefined, query,
    )
  }

  getResignation(empid: string) {
    return this.request<ResignationWire>('GET', '/api/resignations/{empid}', { empid })
  }

  registerApplicant(body: {
    name: string
    contact_email: string
    contact_phone: string
    // raw user input passes through so the server reports missing or
    // malformed values itself instead of Number('') turning into 0
    work_experience_years: number | string
    specialization: string
    interest: string
    resume_text: string
  }) {
    return this.request<ApplicantWire>('POST', '/api/applicants', {}, body)
  }
}
