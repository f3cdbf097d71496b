"""The 2x2 case: power-map determinants are squared Lucas numbers.

For a 2x2 integer matrix the determinant of the derivative of X -> X^n
collapses to n^2 * det(X)^(n-1) * U_n^2, where U_n is the Lucas sequence
of the trace and determinant. The Fibonacci matrix makes this concrete:
its Lucas sequence is the Fibonacci sequence itself.
"""

from matdivseq import IntMatrix, jacobian_determinant, lucas_2x2

fib = IntMatrix([[1, 1], [1, 0]])
print("X =")
print(fib)
print()
print("trace =", fib.trace, " det =", -1)
print()

print(" n   F_n   n^2 (-1)^(n-1) F_n^2   det of the power-map derivative")
f_prev, f_n = 0, 1
for n in range(1, 11):
    direct = jacobian_determinant(fib, n)
    lucas = lucas_2x2(fib, n)
    assert direct == lucas
    print(f"{n:2d}  {f_n:4d}  {n * n * (-1) ** (n - 1) * f_n ** 2:20d}   {direct:20d}")
    f_prev, f_n = f_n, f_prev + f_n

print()
print("The two columns agree for every n: the 4x4 determinant on the right")
print("is exactly the Lucas-square formula on the left. Divisibility is")
print("inherited from the Fibonacci numbers: F_n | F_m whenever n | m.")
