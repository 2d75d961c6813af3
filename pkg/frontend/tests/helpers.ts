// Shared plumbing for the console tests: they drive the real client
// modules (built into dist/) against the live server from globalSetup.
import { HrmsApi, type EmployeeAttrs } from '../dist/assets/api.js'

export const ADMIN_USER = 'admin'
export const ADMIN_PASSWORD = 's3cretpass'

export function baseUrl(): string {
  const base = process.env.HRMS_TEST_BASE
  if (!base) throw new Error('HRMS_TEST_BASE not set (globalSetup failed?)')
  return base
}

export function publicApi(): InstanceType<typeof HrmsApi> {
  return new HrmsApi(baseUrl())
}

export async function adminApi(): Promise<InstanceType<typeof HrmsApi>> {
  const api = publicApi()
  await api.login(ADMIN_USER, ADMIN_PASSWORD)
  return api
}

let counter = 0

/** A fresh 10-char employee id per call, unique across the run. */
export function uniqueEmpid(): string {
  counter += 1
  return `T${String(Date.now() % 10_000_000).padStart(7, '0').slice(-7)}${String(counter % 100).padStart(2, '0')}`
}

export function employeeAttrs(empid: string, overrides: Record<string, string> = {}): EmployeeAttrs {
  return {
    Title: 'Ms',
    Empid: empid,
    Firname: 'Test',
    Midname: '',
    Lastname: 'Person',
    Blood: 'O+',
    Nation: 'Indian',
    Address: '12 Lake View Road',
    City: 'Salem',
    State: 'Tamil Nadu',
    Pin: '636005',
    Home: '0427223344',
    Workplace: '0427556677',
    Mobile: '9876543210',
    Email: `${empid.toLowerCase()}@example.com`,
    Status: 'Active',
    Supervisor: 'R Kumar',
    Hdate: '2015-06-01',
    Dept: 'CS',
    Bdate: '1990-02-11',
    gender: 'F',
    marital: 'S',
    ...overrides,
  }
}
