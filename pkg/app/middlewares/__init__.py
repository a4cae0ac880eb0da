# Middleware modules
