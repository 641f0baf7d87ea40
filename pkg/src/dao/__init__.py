# DAO层初始化文件