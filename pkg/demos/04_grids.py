# coding: utf-8

# # Lines through Cartesian products
#
# For finite A, B in C (each of size at least 2) some line meets A x B in
# exactly two points. Over H the count can be forced up, but some line still
# meets the grid in 2 to 5 points.

# In[1]:

from sylgal import (
    GridSpec,
    ScalarField,
    check_grid_theorem,
    equilateral_third_points,
    gen_random_grid,
    gen_simplex4,
    interchange_probe,
    is_equilateral,
    projection_similarity_check,
    proof_line,
)

C = ScalarField("C", "exact")
A = B = [C.scalar(x) for x in range(3)]
rep = check_grid_theorem(GridSpec(A, B, C))
print(rep.verdict, "witness", rep.witness.members, "histogram", rep.report.histogram)


# Random quaternionic grids. The slope form y = x m + c of the witness line
# gives a similarity x -> x m + c between its two projections.

# In[2]:

HF = ScalarField("H", "float")
G = gen_random_grid(5, 6, HF, seed=3)
rep = check_grid_theorem(G)
print(rep.verdict, "witness count", rep.witness_count)
chk = projection_similarity_check(G, rep.witness.line)
print("maps onto:", chk.maps_onto, " ratio preserved:", chk.ratio_ok)
print("line through a closest pair of A and a furthest pair of B:", proof_line(G).members)


# Equilateral sets bound those projections. In R^4 the largest one has five
# points, a regular simplex.

# In[3]:

S = gen_simplex4("exact")
print(is_equilateral(S))


# The complex argument looks for third points at the apexes of equilateral
# triangles. A grid built on such a triangle shows the situation.

# In[4]:

t_plus, t_minus = equilateral_third_points(C.zero(), C.one())
print(t_plus, t_minus)
T = [C.zero(), C.one(), t_plus]
probe = interchange_probe(C.zero(), C.one(), C.zero(), C.one(), T, T)
print("third points:", probe.direct, "on apexes:", probe.direct_on_apexes)
