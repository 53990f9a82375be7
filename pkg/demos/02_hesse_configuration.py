# coding: utf-8

# # The Hesse configuration
#
# Over the reals every finite noncollinear point set has a line through
# exactly two of its points. Over the complex numbers this fails: the nine
# inflection points of the cubic x^3 + y^3 + z^3 = 0 span twelve lines and
# every one of them carries three points.

# In[1]:

from sylgal import check_sg_bound, enumerate_lines, find_witness, gen_hesse

S = gen_hesse()
for idx, p in enumerate(S):
    print(idx, p.x, "|", p.y)


# Enumerate all spanned lines. The histogram maps line size to count.

# In[2]:

rep = enumerate_lines(S)
print("histogram:", rep.histogram)
for line in rep.lines:
    print(line.members)


# Every point lies on four of the twelve lines.

# In[3]:

print([sum(p in s.members for s in rep.lines) for p in range(len(S))])


# There is no 2-point line, but the complex bound still holds: some line
# carries between 2 and 5 points.

# In[4]:

res = check_sg_bound(S)
print("passed:", res.passed, " smallest line:", res.witness.members, " bound:", res.bound)


# The minimum-distance witness and its normalized picture. After moving the
# point to (0, 1) and the line to the x-axis, the members sit at 2 and
# -1 +- sqrt(3) i, pairwise more than 60 degrees apart as seen from the origin.

# In[5]:

w = find_witness(S)
print("point", w.p, "line", w.line.members, "dist^2", w.dist_sq)
for z in w.normalized_line_points:
    print("  z = %.6f %+.6fi" % z[:2])
print("angle check:", w.angle_check)
