# Pydantic schemas package