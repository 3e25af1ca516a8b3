# Degenerate r-Stirling numbers of the second kind, with lambda left symbolic.
from degenbell import stirling_r, stirling_r_oracle, rstirling_count_oracle, stirling_table

# rows of the triangle for r = 1; every entry is a polynomial in lambda
for n, row in enumerate(stirling_table(4, 1)):
    print(n, " | ".join(s.pretty() for s in row))

# the recurrence and the forward-difference basis conversion agree exactly
s = stirling_r(5, 2, 2)
print(s, "==", stirling_r_oracle(5, 2, 2), s == stirling_r_oracle(5, 2, 2))

# at lambda = 0 the numbers count restricted set partitions
print("S(3,1; r=1) at lambda=0:", stirling_r(3, 1, 1).evaluate(0))
print("brute-force count:       ", rstirling_count_oracle(3, 1, 1))

# plugging in a numeric lambda
print("S(4,2; r=1) at lambda=1/2:", stirling_r(4, 2, 1).evaluate("1/2"))
