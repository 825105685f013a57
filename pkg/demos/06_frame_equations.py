"""Symbolic check of the adapted-frame structure equations on the homogeneous link."""

from cayley_weights.frames import l3_frame, second_fundamental_form, structure_equation_residuals, verify_structure_equations

# %% All five equations close exactly with the stated connection forms.
report = verify_structure_equations()
for check in report.checks:
    print(f"{check.name}: {'zero' if check.passed else check.offending()}   [{check.equation}]")
print("d^2 = 0:", not any(report.d_squared), " Jacobi:", not report.jacobi_defect, " traces:", set(report.traces.values()))

# %% Nonzero second fundamental form entries.
for key, value in sorted(second_fundamental_form().items()):
    if value:
        print("h^%d_%d%d =" % key, value)

# %% Changing the normal connection breaks exactly one equation.
for a in (1, 2, 3):
    print("a =", a, [c.name for c in structure_equation_residuals(l3_frame(a)) if not c.passed])
