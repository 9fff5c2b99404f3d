"""Where does the median go when a triangle flattens into a needle?

Fix two sides alpha >= beta and shrink the third side gamma toward
alpha - beta. The region collapses onto a segment, yet the median's
distance from the vertex joining the fixed sides tends to the crisp
limit sqrt(alpha * beta / 2), not to anything resembling a midpoint.
"""

import math

from regionmedian.solver import degenerate_limit_study

alpha, beta = 2.0, 1.0
limit = math.sqrt(alpha * beta / 2.0)
print("sides alpha=%.1f beta=%.1f, limiting distance sqrt(alpha*beta/2) = %.12f\n"
      % (alpha, beta, limit))

gammas = [1.5, 1.1, 1.01, 1.001, 1.0001]
rows = degenerate_limit_study(alpha, beta, gammas)
print("%10s  %18s  %12s" % ("gamma", "median distance", "gap to limit"))
for gamma, dist in rows:
    print("%10.4f  %18.12f  %12.3e" % (gamma, dist, abs(dist - limit)))

print("\nthe same limit shows up when two equal sides close like scissors:")
for a in (1.0, 2.0):
    iso = degenerate_limit_study(a, a, [0.01 * a])
    print("  alpha=beta=%.1f, gamma=%.3f: distance %.9f vs sqrt(alpha^2/2)=%.9f"
          % (a, 0.01 * a, iso[0][1], math.sqrt(a * a / 2.0)))
