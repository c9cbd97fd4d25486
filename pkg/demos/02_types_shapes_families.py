"""Tame types and their combinatorics: digit vectors, admissible shapes,
refined shapes, the standard module pairs, and family dimensions."""

from bktame import (CUSPIDAL, PS, LocalContext, build_MN, enumerate_types,
                    family_dim, gamma_digits, make_type, maximal_refined,
                    p_tau, refined_shapes, shapes_for)

ctx = LocalContext(3, 1, 1)
print("context p=3, f=1, e=1; q =", ctx.q)

print("\ncanonical types:")
for tau in enumerate_types(ctx, canonical=True):
    print("  %-10s gamma=%s" % (tau.label(), list(gamma_digits(tau))))

tau = make_type(ctx, PS, 1, 0)
print("\nadmissible shapes of ps:1,0:", [sorted(s.J) for s in p_tau(tau)])

tau_c = make_type(ctx, CUSPIDAL, 1)
print("admissible shapes of cusp:1:", [sorted(s.J) for s in p_tau(tau_c)],
      " (the other shape hits a forbidden digit)")

# Refined shapes pick the Frobenius exponents; the maximal one has every
# selector equal to e and realises the top family dimension e*f.
for shape in shapes_for(tau_c):
    rs_all = refined_shapes(tau_c, shape)
    rs_max = maximal_refined(tau_c, shape)
    m, n = build_MN(tau_c, rs_max)
    print("\nJ=%s: %d refined shape(s); maximal y=%s, family dim %d"
          % (sorted(shape.J), len(rs_all), list(rs_max.y),
         family_dim(tau_c, rs_max)))
    print("  M: r=%s c=%s   N: r=%s c=%s" % (m.r, m.c, n.r, n.c))
