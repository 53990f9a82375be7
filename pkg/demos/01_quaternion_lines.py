# coding: utf-8

# # Lines in the quaternionic plane
#
# Quaternion multiplication does not commute, so the plane H^2 is treated as a
# *left* vector space: scalars multiply coordinates from the left. This script
# builds a few lines and checks which points lie on them.

# In[1]:

from fractions import Fraction

from sylgal import Point, ScalarField, dist_sq_point_line, line_through, on_line

H = ScalarField("H", "exact")
one, i, j, k = (H.scalar(*[1 if n == t else 0 for n in range(4)]) for t in range(4))
zero = H.zero()

print("i*j =", i * j, "  j*i =", j * i)


# The line through (0, 0) and (1, i) has slope m with y = x*m + c.

# In[2]:

line = line_through(Point(zero, zero), Point(one, i))
print(line)


# j*i = -k, so the point (j, -k) is on the line, while (j, k) is not. Note
# that (j, -k) is the left multiple j*(1, i) of the direction vector.

# In[3]:

for p in (Point(j, -k), Point(j, k)):
    print(p.x, p.y, "on line:", on_line(p, line), " dist^2:", dist_sq_point_line(p, line))


# Squared distances stay exact: the point (0, 0) lies at distance^2 1/2 from the
# line through (0, 1) and (1, 0).

# In[4]:

d = dist_sq_point_line(Point(zero, zero), line_through(Point(zero, one), Point(one, zero)))
print(d, d == Fraction(1, 2))


# The float backend gives the same answers up to rounding.

# In[5]:

HF = ScalarField("H", "float")
p = Point(HF.scalar(0.3, 1, -2, 0.5), HF.scalar(1, 1, 1, 1))
q = Point(HF.scalar(0, 1), HF.scalar(2, 0, 0, -1))
r = Point(HF.scalar(1, 0, 3), HF.scalar(0.25))
print("float dist^2:", dist_sq_point_line(p, line_through(q, r)))
