# verifying module
