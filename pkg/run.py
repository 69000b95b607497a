#!/usr/bin/env python3
"""
Frobenius Stratification Toolkit - Development Server
Run this file to start the HTTP API locally
"""

import uvicorn

if __name__ == "__main__":
    uvicorn.run(
        "app.main:app",
        host="127.0.0.1",
        port=8000,
        reload=True,
        log_level="info"
    )
