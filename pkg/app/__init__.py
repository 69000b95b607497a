# Frobenius stratification toolkit
