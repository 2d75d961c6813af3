"""hrms: an HR management service.

Employee records, payroll computation, training schedules, performance
evaluations with leave management, resignation archiving and applicant
tracking — behind an authenticated JSON/HTTP API with an embedded
transactional store, criteria-driven reports and an admin CLI.
"""

__version__ = "0.1.0"
